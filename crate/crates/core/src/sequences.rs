//! Euler polynomials, Euler numbers and Bernoulli numbers, computed exactly.
//!
//! `E_n(0)` comes from the midpoint relation `E_n(0) + E_n(1) = 0` (n ≥ 1)
//! combined with the Appell expansion; [`solve_midpoint`] recovers the same
//! polynomials by a direct linear solve and serves as the cross-check.

use num::{One, Zero};

use crate::arith::{binomial_q, int, pow2, rat, GaussianRational, Rational};
pub use crate::poly::RatPoly;

/// `[E_0(0), ..., E_n(0)]`.
pub fn euler_zero_values(n: u32) -> Vec<Rational> {
    let mut values: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    values.push(Rational::one());
    for m in 1..=n {
        let sum: Rational = (0..m).map(|k| binomial_q(m, k) * &values[k as usize]).sum();
        values.push(-sum / int(2));
    }
    values
}

pub fn euler_at_zero(n: u32) -> Rational {
    euler_zero_values(n).pop().expect("nonempty")
}

/// `E_n(x) = Σ_k C(n,k) E_k(0) x^{n−k}`.
pub fn euler_polynomial(n: u32) -> RatPoly {
    let values = euler_zero_values(n);
    RatPoly::from_terms(values.iter().enumerate().map(|(k, e)| {
        let k = k as u32;
        (n - k, GaussianRational::real(binomial_q(n, k) * e))
    }))
}

/// `E_n(x + 1/2)`.
pub fn shifted_euler(n: u32) -> RatPoly {
    euler_polynomial(n).translate(&GaussianRational::real(rat(1, 2)))
}

/// The Euler number `2ⁿ E_n(1/2)`; an integer, zero for odd `n`.
pub fn euler_number(n: u32) -> Rational {
    let half = GaussianRational::real(rat(1, 2));
    let value = euler_polynomial(n).eval(&half);
    debug_assert!(value.is_real());
    pow2(n) * value.re()
}

/// `[B_0, ..., B_n]` with `B_1 = −1/2`.
pub fn bernoulli_numbers(n: u32) -> Vec<Rational> {
    let mut values: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    values.push(Rational::one());
    for m in 1..=n {
        let sum: Rational = (0..m)
            .map(|k| binomial_q(m + 1, k) * &values[k as usize])
            .sum();
        values.push(-sum / int(i64::from(m) + 1));
    }
    values
}

pub fn bernoulli_number(n: u32) -> Rational {
    bernoulli_numbers(n).pop().expect("nonempty")
}

/// Solves `½P(x) + ½P(x+1) = xⁿ` for the degree-`n` polynomial `P` by
/// Gaussian elimination on its coefficient vector.
pub fn solve_midpoint(n: u32) -> RatPoly {
    let size = n as usize + 1;
    let half = rat(1, 2);
    // Row j collects the coefficient of x^j: ½p_j + ½Σ_{k≥j} C(k,j) p_k.
    let mut rows: Vec<Vec<Rational>> = (0..size)
        .map(|j| {
            let mut row: Vec<Rational> = (0..size)
                .map(|k| &half * binomial_q(k as u32, j as u32))
                .collect();
            row[j] += &half;
            row.push(if j == n as usize {
                Rational::one()
            } else {
                Rational::zero()
            });
            row
        })
        .collect();

    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !rows[r][col].is_zero())
            .expect("midpoint system is nonsingular");
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for entry in rows[col].iter_mut() {
            *entry *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *entry -= &factor * p;
            }
        }
    }

    let solution: Vec<Rational> = rows.into_iter().map(|row| row[size].clone()).collect();
    let p = RatPoly::from_rationals(&solution);
    debug_assert_eq!(p, euler_polynomial(n));
    p
}
