//! Concrete action of the algebra on polynomials: `p = c·d/dx`, `q = x·`.
//!
//! This realization is faithful, so it doubles as an oracle for the product
//! kernel in [`crate::weyl`]: two elements are equal iff they act equally on
//! enough monomials `xˡ`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num::{BigInt, One};

use crate::arith::{binomial_q, factorial_q, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::poly::CPoly;
use crate::weyl::{normal_mul, WeylElement};

/// Polynomial in `x` with coefficients in ℚ(i)[c].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: BTreeMap<u32, CPoly>,
}

fn accumulate(map: &mut BTreeMap<u32, CPoly>, k: u32, v: CPoly) {
    if v.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &v;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `xˡ`.
    pub fn monomial(l: u32) -> Self {
        Self::term(l, CPoly::one())
    }

    pub fn term(l: u32, coeff: CPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        accumulate(&mut coeffs, l, coeff);
        Self { coeffs }
    }

    pub fn coeff(&self, l: u32) -> CPoly {
        self.coeffs.get(&l).cloned().unwrap_or_else(CPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &CPoly)> + '_ {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let mut coeffs = self.coeffs.clone();
        for (&k, v) in &other.coeffs {
            accumulate(&mut coeffs, k, v.clone());
        }
        XPoly { coeffs }
    }

    pub fn sub(&self, other: &XPoly) -> XPoly {
        let mut coeffs = self.coeffs.clone();
        for (&k, v) in &other.coeffs {
            accumulate(&mut coeffs, k, -v);
        }
        XPoly { coeffs }
    }

    pub fn scale(&self, k: &CPoly) -> XPoly {
        let mut coeffs = BTreeMap::new();
        for (&d, v) in &self.coeffs {
            accumulate(&mut coeffs, d, v * k);
        }
        XPoly { coeffs }
    }

    pub fn specialize_c(&self, v: &GaussianRational) -> XPoly {
        let mut coeffs = BTreeMap::new();
        for (&d, coeff) in &self.coeffs {
            accumulate(&mut coeffs, d, CPoly::constant(coeff.subst(v)));
        }
        XPoly { coeffs }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&d, v)) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v})*x^{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `l·(l−1)···(l−b+1)`.
fn falling(l: u32, b: u32) -> BigInt {
    (0..b).fold(BigInt::one(), |acc, j| acc * (l - j))
}

/// Applies `w` to `f`: each normal-ordered `qᵃpᵇ` differentiates `b` times
/// (with a factor `c` each time) and then multiplies by `xᵃ`.
pub fn apply_element(w: &WeylElement, f: &XPoly) -> XPoly {
    let mut out = BTreeMap::new();
    for ((a, b), coeff) in w.terms() {
        for (&l, fc) in &f.coeffs {
            if b > l {
                continue;
            }
            let weight = Rational::from_integer(falling(l, b));
            let v = (coeff * fc).shift_up(b).scale_rat(&weight);
            accumulate(&mut out, l - b + a, v);
        }
    }
    XPoly { coeffs: out }
}

/// `[pⁿ/n!, qᵐ/m!] xˡ = (cⁿ/m!)(C(m+l, n) − C(l, n)) x^{l−n+m}` for `l ≥ n`.
pub fn monomial_commutator_action(n: u32, m: u32, l: u32) -> Result<(CPoly, u32)> {
    if l < n {
        return Err(Error::PreconditionViolation(format!(
            "need l >= n, got l={l}, n={n}"
        )));
    }
    let weight = (binomial_q(m + l, n) - binomial_q(l, n)) / factorial_q(m);
    let coeff = CPoly::monomial(n, GaussianRational::real(weight));
    Ok((coeff, l - n + m))
}

/// `{pᵃ/a!, qᵇ/b!} xˡ = (cᵃ/b!)(C(b+l, a) + C(l, a)) x^{l−a+b}`.
pub fn monomial_anticommutator_action(a: u32, b: u32, l: u32) -> XPoly {
    if l + b < a {
        return XPoly::zero();
    }
    let weight = (binomial_q(b + l, a) + binomial_q(l, a)) / factorial_q(b);
    XPoly::term(
        l + b - a,
        CPoly::monomial(a, GaussianRational::real(weight)),
    )
}

/// Reconstructs the normal-ordered coefficients of an element from its
/// actions `w·xˡ` for `l = 0, 1, …`. Only `p`-degrees below `actions.len()`
/// are recoverable.
pub fn recover_element(actions: &[XPoly]) -> Result<WeylElement> {
    let mut recovered = WeylElement::zero();
    for (l, action) in actions.iter().enumerate() {
        let l = l as u32;
        let known = apply_element(&recovered, &XPoly::monomial(l));
        let residual = action.sub(&known);
        // residual = Σ_a coeff_{a,l} · cˡ · l! · xᵃ
        let inv_fact = factorial_q(l).recip();
        for (a, v) in residual.terms() {
            let coeff = v
                .shift_down(l)
                .ok_or_else(|| Error::NonDivisible(format!("coefficient of x^{a} at l={l}: {v}")))?
                .scale_rat(&inv_fact);
            recovered = &recovered + &WeylElement::term(a, l, coeff);
        }
    }
    Ok(recovered)
}

/// Checks the reordering kernel against composed actions:
/// `(pᵇ·qᵃ)·xˡ = pᵇ(qᵃ xˡ)` for all `a, b ≤ max_exp`.
pub fn kernel_self_test(max_exp: u32) -> std::result::Result<(), String> {
    for b in 0..=max_exp {
        for a in 0..=max_exp {
            let pb = WeylElement::monomial(0, b);
            let qa = WeylElement::monomial(a, 0);
            let product = normal_mul(&pb, &qa);
            for l in 0..=2 * max_exp {
                let x = XPoly::monomial(l);
                let direct = apply_element(&product, &x);
                let composed = apply_element(&pb, &apply_element(&qa, &x));
                if direct != composed {
                    return Err(format!(
                        "p^{b} q^{a} on x^{l}: normal form gives {direct}, composition gives {composed}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Runs [`kernel_self_test`] for exponents up to 6 once per process.
pub fn ensure_kernel_validated() -> std::result::Result<(), String> {
    static RESULT: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    RESULT.get_or_init(|| kernel_self_test(6)).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::weyl::commutator;

    fn cmono(k: u32, v: Rational) -> CPoly {
        CPoly::monomial(k, GaussianRational::real(v))
    }

    #[test]
    fn derivative_action() {
        let got = apply_element(&WeylElement::p(), &XPoly::monomial(3));
        assert_eq!(got, XPoly::term(2, cmono(1, int(3))));
    }

    #[test]
    fn canonical_relation_on_monomials() {
        let pq = commutator(&WeylElement::p(), &WeylElement::q());
        for l in 0..=5 {
            assert_eq!(
                apply_element(&pq, &XPoly::monomial(l)),
                XPoly::term(l, CPoly::c())
            );
        }
    }

    #[test]
    fn product_vs_composition() {
        let p2 = WeylElement::monomial(0, 2);
        let q2 = WeylElement::monomial(2, 0);
        let x2 = XPoly::monomial(2);
        let composed = apply_element(&p2, &apply_element(&q2, &x2));
        assert_eq!(apply_element(&normal_mul(&p2, &q2), &x2), composed);
        // p² x⁴ = 12c² x²
        assert_eq!(composed, XPoly::term(2, cmono(2, int(12))));
    }

    #[test]
    fn commutator_closed_form_examples() {
        for l in 1..6 {
            assert_eq!(
                monomial_commutator_action(1, 1, l).unwrap(),
                (CPoly::c(), l)
            );
        }
        let half = Rational::new(5.into(), 2.into());
        assert_eq!(
            monomial_commutator_action(2, 2, 2).unwrap(),
            (cmono(2, half), 2)
        );
        assert_eq!(
            monomial_commutator_action(1, 2, 1).unwrap(),
            (cmono(1, int(1)), 2)
        );
        assert!(matches!(
            monomial_commutator_action(3, 1, 2),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn closed_forms_agree_with_action() {
        for n in 0..=6u32 {
            for m in 0..=6u32 {
                let pn = WeylElement::monomial(0, n).scale_rat(&factorial_q(n).recip());
                let qm = WeylElement::monomial(m, 0).scale_rat(&factorial_q(m).recip());
                let comm = commutator(&pn, &qm);
                for l in n..=8 {
                    let (coeff, deg) = monomial_commutator_action(n, m, l).unwrap();
                    assert_eq!(
                        apply_element(&comm, &XPoly::monomial(l)),
                        XPoly::term(deg, coeff)
                    );
                }
                for k in 0..=m.min(n) {
                    let (a, b) = (n - k, m - k);
                    let pa = WeylElement::monomial(0, a).scale_rat(&factorial_q(a).recip());
                    let qb = WeylElement::monomial(b, 0).scale_rat(&factorial_q(b).recip());
                    let anti = crate::weyl::anticommutator(&pa, &qb);
                    for l in 0..=8 {
                        assert_eq!(
                            apply_element(&anti, &XPoly::monomial(l)),
                            monomial_anticommutator_action(a, b, l),
                            "a={a} b={b} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_passes_self_test() {
        assert_eq!(ensure_kernel_validated(), Ok(()));
    }

    #[test]
    fn recovery_round_trip() {
        let w: WeylElement = "(1 + c) * q^2 p + -1/2 * p^3 + i*c^2 + 3 * q^4"
            .parse()
            .unwrap();
        let actions: Vec<XPoly> = (0..=8)
            .map(|l| apply_element(&w, &XPoly::monomial(l)))
            .collect();
        assert_eq!(recover_element(&actions).unwrap(), w);
    }
}
