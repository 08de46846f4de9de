//! Truncated matrix realization on the Hermite-function basis `ψ_0 … ψ_{D−1}`.
//!
//! Column `l` of an operator matrix holds the expansion of `Op ψ_l`. The
//! ladder relations are
//!
//! ```text
//! qψ_l = i(√(l/2) ψ_{l−1} − √((l+1)/2) ψ_{l+1})
//! pψ_l =    √(l/2) ψ_{l−1} + √((l+1)/2) ψ_{l+1}
//! Hψ_l = (l + 1/2) ψ_l
//! ```
//!
//! so `qp − pq = i`. Every operator built here moves the index by at most
//! one, hence only the last column is affected by truncation; comparisons
//! run over the safe region `l ≤ D − 2`.

use nalgebra::{DMatrix, DVector};
use num::Complex;

use crate::error::{Error, Result};
use crate::weyl::WeylElement;

pub type C64 = Complex<f64>;

/// Default truncation size.
pub const DEFAULT_DIM: usize = 64;
/// Default relative tolerance for numeric comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct OscillatorMatrices {
    pub dim: usize,
    pub q_mat: DMatrix<C64>,
    pub p_mat: DMatrix<C64>,
    pub h_mat: DMatrix<C64>,
}

const I: C64 = C64 { re: 0.0, im: 1.0 };

fn lower(l: usize) -> f64 {
    (l as f64 / 2.0).sqrt()
}

fn upper(l: usize) -> f64 {
    ((l as f64 + 1.0) / 2.0).sqrt()
}

pub fn build_operators(dim: usize) -> Result<OscillatorMatrices> {
    if dim < 4 {
        return Err(Error::PreconditionViolation(format!(
            "dimension must be >= 4, got {dim}"
        )));
    }
    let mut q_mat = DMatrix::<C64>::zeros(dim, dim);
    let mut p_mat = DMatrix::<C64>::zeros(dim, dim);
    let mut h_mat = DMatrix::<C64>::zeros(dim, dim);
    for l in 0..dim {
        h_mat[(l, l)] = C64::new(l as f64 + 0.5, 0.0);
        if l >= 1 {
            q_mat[(l - 1, l)] = I * lower(l);
            p_mat[(l - 1, l)] = C64::new(lower(l), 0.0);
        }
        if l + 1 < dim {
            q_mat[(l + 1, l)] = -I * upper(l);
            p_mat[(l + 1, l)] = C64::new(upper(l), 0.0);
        }
    }
    Ok(OscillatorMatrices {
        dim,
        q_mat,
        p_mat,
        h_mat,
    })
}

impl OscillatorMatrices {
    pub fn new(dim: usize) -> Result<Self> {
        build_operators(dim)
    }

    /// Last index unaffected by truncation.
    pub fn safe_max(&self) -> usize {
        self.dim - 2
    }

    /// `{q, H}_n` by repeated anti-commutation.
    pub fn nested_anticomm(&self, n: u32) -> DMatrix<C64> {
        let mut acc = self.q_mat.clone();
        for _ in 0..n {
            acc = &acc * &self.h_mat + &self.h_mat * &acc;
        }
        acc
    }

    /// `({q, H} + a)_n = Σ_k C(n,k) a^{n−k} {q, H}_k`.
    pub fn shifted_nested_anticomm(&self, a: f64, n: u32) -> DMatrix<C64> {
        let mut total = DMatrix::<C64>::zeros(self.dim, self.dim);
        let mut nested = self.q_mat.clone();
        let mut binom = 1.0f64;
        for k in 0..=n {
            total += &nested * C64::new(binom * a.powi((n - k) as i32), 0.0);
            binom = binom * f64::from(n - k) / f64::from(k + 1);
            nested = &nested * &self.h_mat + &self.h_mat * &nested;
        }
        total
    }

    /// `{q, Hⁿ}`.
    pub fn anticomm_with_h_power(&self, n: u32) -> DMatrix<C64> {
        let mut hn = DMatrix::<C64>::identity(self.dim, self.dim);
        for _ in 0..n {
            hn = &hn * &self.h_mat;
        }
        &self.q_mat * &hn + &hn * &self.q_mat
    }

    /// Max deviation of `qp − pq` from `i·I` over the safe region.
    pub fn canonical_defect(&self) -> f64 {
        let comm = &self.q_mat * &self.p_mat - &self.p_mat * &self.q_mat;
        let mut worst = 0.0f64;
        for i in 0..self.dim - 1 {
            for j in 0..self.dim - 1 {
                let target = if i == j { I } else { C64::new(0.0, 0.0) };
                worst = worst.max((comm[(i, j)] - target).norm());
            }
        }
        worst
    }
}

/// `{q, H}_n ψ_l = i·2^{n−1/2}(l^{n+1/2} ψ_{l−1} − (l+1)^{n+1/2} ψ_{l+1})`.
pub fn closed_form_column(n: u32, l: usize, dim: usize) -> DVector<C64> {
    let mut col = DVector::<C64>::zeros(dim);
    let scale = 2f64.powf(f64::from(n) - 0.5);
    let e = f64::from(n) + 0.5;
    if l >= 1 {
        col[l - 1] = I * scale * (l as f64).powf(e);
    }
    if l + 1 < dim {
        col[l + 1] = -I * scale * ((l + 1) as f64).powf(e);
    }
    col
}

/// `max|got − expected| / max|expected|`.
pub fn relative_error<'a>(
    got: impl IntoIterator<Item = &'a C64>,
    expected: impl IntoIterator<Item = &'a C64>,
) -> f64 {
    let mut diff = 0.0f64;
    let mut scale = 0.0f64;
    for (g, e) in got.into_iter().zip(expected) {
        diff = diff.max((g - e).norm());
        scale = scale.max(e.norm());
    }
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// Worst relative column error over `0 ≤ l ≤ D−2`; returns
/// `ToleranceExceeded` with the offending column when it exceeds `tol`.
pub fn compare_columns(
    n: u32,
    got: &DMatrix<C64>,
    expected: impl Fn(usize) -> DVector<C64>,
    tol: f64,
) -> Result<f64> {
    let dim = got.nrows();
    let mut worst = (0usize, 0.0f64);
    for l in 0..=dim - 2 {
        let exp = expected(l);
        let err = relative_error(got.column(l).iter(), exp.iter());
        if err > worst.1 || err.is_nan() {
            worst = (l, err);
        }
    }
    if worst.1 > tol || worst.1.is_nan() {
        return Err(Error::ToleranceExceeded {
            n,
            l: worst.0,
            error: worst.1,
        });
    }
    Ok(worst.1)
}

/// Matrix `{q,H}_n` against the closed form, column by column.
pub fn check_nested_anticomm_closed_form(n: u32, dim: usize, tol: f64) -> Result<f64> {
    if dim < n as usize + 4 {
        return Err(Error::PreconditionViolation(format!(
            "need D >= n + 4, got D={dim}, n={n}"
        )));
    }
    let ops = build_operators(dim)?;
    let got = ops.nested_anticomm(n);
    compare_columns(n, &got, |l| closed_form_column(n, l, dim), tol)
}

/// `2⁻ⁿ[({q,H}−1)_n + ({q,H}+1)_n]` against `{q, Hⁿ}`.
pub fn check_main_identity(n: u32, ops: &OscillatorMatrices, tol: f64) -> Result<f64> {
    let lhs = (ops.shifted_nested_anticomm(-1.0, n) + ops.shifted_nested_anticomm(1.0, n))
        * C64::new(0.5f64.powi(n as i32), 0.0);
    let rhs = ops.anticomm_with_h_power(n);
    compare_columns(n, &lhs, |l| rhs.column(l).into_owned(), tol)
}

/// `({q,H}±1)_n ψ_l = i√(l/2)(2l±1)ⁿ ψ_{l−1} − i√((l+1)/2)(2l+2±1)ⁿ ψ_{l+1}`,
/// checked for both signs against the matrix computation.
pub fn check_shifted_expansions(n: u32, ops: &OscillatorMatrices, tol: f64) -> Result<f64> {
    let dim = ops.dim;
    let mut worst = 0.0f64;
    for sign in [1.0f64, -1.0] {
        let got = ops.shifted_nested_anticomm(sign, n);
        let expected = |l: usize| {
            let mut col = DVector::<C64>::zeros(dim);
            let lf = l as f64;
            if l >= 1 {
                col[l - 1] = I * lower(l) * (2.0 * lf + sign).powi(n as i32);
            }
            if l + 1 < dim {
                col[l + 1] = -I * upper(l) * (2.0 * lf + 2.0 + sign).powi(n as i32);
            }
            col
        };
        worst = worst.max(compare_columns(n, &got, expected, tol)?);
    }
    Ok(worst)
}

fn apply_q(v: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); v.len() + 1];
    for (l, &x) in v.iter().enumerate() {
        if x == C64::new(0.0, 0.0) {
            continue;
        }
        if l >= 1 {
            out[l - 1] += I * lower(l) * x;
        }
        out[l + 1] -= I * upper(l) * x;
    }
    out
}

fn apply_p(v: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); v.len() + 1];
    for (l, &x) in v.iter().enumerate() {
        if x == C64::new(0.0, 0.0) {
            continue;
        }
        if l >= 1 {
            out[l - 1] += lower(l) * x;
        }
        out[l + 1] += upper(l) * x;
    }
    out
}

/// Expansion of `w ψ_l` in the untruncated basis; `w` must be free of the
/// formal symbol `c` (specialized at `c = −i`).
pub fn apply_element_to_basis(w: &WeylElement, l: usize) -> Result<Vec<C64>> {
    if !w.is_c_free() {
        return Err(Error::PreconditionViolation(
            "element must be specialized before numeric evaluation".into(),
        ));
    }
    let deg = w.degree().unwrap_or(0) as usize;
    let max_p = w.terms().map(|((_, b), _)| b).max().unwrap_or(0);
    let mut basis = vec![C64::new(0.0, 0.0); l + 1];
    basis[l] = C64::new(1.0, 0.0);
    let mut p_powers = vec![basis];
    for _ in 0..max_p {
        let next = apply_p(p_powers.last().expect("nonempty"));
        p_powers.push(next);
    }
    let mut out = vec![C64::new(0.0, 0.0); l + deg + 1];
    for ((a, b), coeff) in w.terms() {
        let coeff = coeff.constant_term().to_complex_f64();
        let mut v = p_powers[b as usize].clone();
        for _ in 0..a {
            v = apply_q(&v);
        }
        for (idx, x) in v.into_iter().enumerate() {
            out[idx] += coeff * x;
        }
    }
    Ok(out)
}

/// Compares a specialized symbolic element with a matrix over the safe region.
pub fn check_element_against_matrix(
    n: u32,
    w: &WeylElement,
    matrix: &DMatrix<C64>,
    tol: f64,
) -> Result<f64> {
    let dim = matrix.nrows();
    let mut columns = Vec::with_capacity(dim);
    for l in 0..=dim - 2 {
        let mut v = apply_element_to_basis(w, l)?;
        v.resize(dim, C64::new(0.0, 0.0));
        columns.push(v);
    }
    compare_columns(
        n,
        matrix,
        |l| DVector::from_vec(columns[l][..dim].to_vec()),
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        let ops = build_operators(4).unwrap();
        for l in 0..4 {
            assert_eq!(ops.h_mat[(l, l)], C64::new(l as f64 + 0.5, 0.0));
        }
        let expected = -I * (0.5f64).sqrt();
        assert!((ops.q_mat[(1, 0)] - expected).norm() < 1e-15);
        assert_eq!(ops.q_mat[(0, 0)], C64::new(0.0, 0.0));
        assert!(build_operators(3).is_err());
    }

    #[test]
    fn canonical_relation_in_safe_region() {
        let ops = build_operators(64).unwrap();
        assert!(ops.canonical_defect() < 1e-12);
    }

    #[test]
    fn nested_anticomm_column_zero() {
        // {q,H}ψ_0 = ½qψ_0 + H(qψ_0) = −i√2 ψ_1
        let ops = build_operators(8).unwrap();
        let m = ops.nested_anticomm(1);
        assert!((m[(1, 0)] - (-I * 2f64.sqrt())).norm() < 1e-14);
        let closed = closed_form_column(1, 0, 8);
        assert!((closed[1] - (-I * 2f64.sqrt())).norm() < 1e-14);
    }

    #[test]
    fn zero_order_is_ladder() {
        let ops = build_operators(16).unwrap();
        for l in 0..15 {
            let closed = closed_form_column(0, l, 16);
            assert!(relative_error(ops.q_mat.column(l).iter(), closed.iter()) < 1e-14);
        }
    }

    #[test]
    fn closed_form_sweep() {
        for n in 0..=8 {
            let err = check_nested_anticomm_closed_form(n, 64, DEFAULT_TOL).unwrap();
            assert!(err <= DEFAULT_TOL, "n={n} err={err}");
        }
        assert!(check_nested_anticomm_closed_form(6, 8, 1e-9).is_err());
    }

    #[test]
    fn main_identity_and_expansions() {
        let ops = build_operators(64).unwrap();
        for n in 0..=8 {
            check_main_identity(n, &ops, DEFAULT_TOL).unwrap();
            check_shifted_expansions(n, &ops, DEFAULT_TOL).unwrap();
        }
    }

    #[test]
    fn tolerance_failure_reports_witness() {
        let ops = build_operators(16).unwrap();
        let wrong = ops.nested_anticomm(2);
        let err = compare_columns(2, &wrong, |l| closed_form_column(3, l, 16), 1e-9).unwrap_err();
        assert!(matches!(err, Error::ToleranceExceeded { n: 2, .. }));
    }

    #[test]
    fn symbolic_q_matches_ladder() {
        let ops = build_operators(32).unwrap();
        let q = WeylElement::q();
        check_element_against_matrix(0, &q, &ops.q_mat, 1e-14).unwrap();
        check_element_against_matrix(0, &WeylElement::p(), &ops.p_mat, 1e-14).unwrap();
    }
}
