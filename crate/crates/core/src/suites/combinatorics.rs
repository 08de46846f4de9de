//! Integer sums behind the algebraic route, and the binomial identity that
//! generalizes the monomial-action form of the convolution.

use num::{BigInt, One, Zero};

use crate::arith::{binomial, binomial_q, GaussianRational};
use crate::poly::RatPoly;
use crate::report::{Check, VerificationReport};
use crate::sequences::euler_polynomial;

fn binom(n: u32, k: i64) -> BigInt {
    if k < 0 {
        BigInt::zero()
    } else {
        binomial(n, k as u32)
    }
}

/// `b_s = Σ_{k ≡ N (mod 2)} Σ_l C(N,k) C(k,l) C(N−k, s−l) (−1)^{s−l}` for order `N`.
pub fn b_coefficient(order: u32, s: u32) -> BigInt {
    let mut total = BigInt::zero();
    for k in (0..=order).filter(|k| (order - k).is_multiple_of(2)) {
        for l in 0..=k.min(s) {
            let term = binomial(order, k) * binomial(k, l) * binom(order - k, i64::from(s - l));
            if (s - l).is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

/// `Σ_{k ≡ N (mod 2)} C(N,k) C(k,i) C(N−k,j)`.
pub fn trinomial_sum(order: u32, i: u32, j: u32) -> BigInt {
    (0..=order)
        .filter(|k| (order - k).is_multiple_of(2))
        .map(|k| binomial(order, k) * binomial(k, i) * binomial(order - k, j))
        .sum()
}

fn trinomial_expected(order: u32, i: u32, j: u32) -> BigInt {
    if i + j < order {
        binomial(order, i) * binomial(order - i, j) * (BigInt::one() << (order - i - j - 1))
    } else if i + j == order {
        if j.is_multiple_of(2) {
            binomial(order, i)
        } else {
            BigInt::zero()
        }
    } else {
        BigInt::zero()
    }
}

fn check_order(chk: &mut Check, order: u32) {
    let top = BigInt::one() << (order - 1);
    for s in 0..=order {
        let got = b_coefficient(order, s);
        let expected = if s == 0 || s == order {
            top.clone()
        } else {
            BigInt::zero()
        };
        chk.holds(&format!("b_{s}"), got == expected, || {
            format!("{got} vs {expected}")
        });
    }
    for i in 0..=order {
        for j in 0..=order {
            let got = trinomial_sum(order, i, j);
            let expected = trinomial_expected(order, i, j);
            chk.holds(&format!("trinomial i={i} j={j}"), got == expected, || {
                format!("{got} vs {expected}")
            });
        }
    }
}

/// Even order `2n`, `n ≥ 1`: `b_0 = b_{2n} = 2^{2n−1}`, other `b_s` vanish,
/// and the differentiated trinomial identity holds for all `i, j`.
pub fn combinatorial_sums(n: u32) -> VerificationReport {
    let order = 2 * n;
    Check::new("combinatorics")
        .param("n", n)
        .param("order", order)
        .run(|chk| {
            if n == 0 {
                return Err(crate::error::Error::PreconditionViolation(
                    "need n >= 1".into(),
                ));
            }
            check_order(chk, order);
            Ok(())
        })
}

/// Odd order `2n + 1`: the same statements, checked empirically.
pub fn combinatorial_sums_odd(n: u32) -> VerificationReport {
    let order = 2 * n + 1;
    Check::new("combinatorics")
        .param("n", n)
        .param("order", order)
        .run(|chk| {
            check_order(chk, order);
            Ok(())
        })
}

fn weighted_sum(m: u32, n: u32, l: u32, basis: impl Fn(u32) -> RatPoly, shifted: bool) -> RatPoly {
    let mut total = RatPoly::zero();
    for k in 0..=m.min(n) {
        let weight = if shifted {
            binomial_q(m, k) * binomial_q(l, n - k)
        } else {
            binomial_q(m, k) * binomial_q(m - k + l, n - k)
        };
        total = &total + &basis(k).scale_rat(&weight);
    }
    total
}

/// `Σ zᵏ C(m,k) C(m−k+l, n−k) = Σ (z+1)ᵏ C(m,k) C(l, n−k)` as polynomials in
/// `z` (or with `zᵏ → E_k(z)` when `euler` is set), plus Chu-Vandermonde
/// `C(m−j+l, n−j) = Σ_k C(m−j,k) C(l, n−k−j)` for the plain form.
pub fn verify_binomial(m: u32, n: u32, l: u32, euler: bool) -> VerificationReport {
    let form = if euler { "euler" } else { "plain" };
    Check::new("binomial")
        .param("m", m)
        .param("n", n)
        .param("l", l)
        .param("form", form)
        .run(|chk| {
            let one = GaussianRational::one();
            let (lhs, rhs) = if euler {
                let polys: Vec<RatPoly> = (0..=m.min(n)).map(euler_polynomial).collect();
                (
                    weighted_sum(m, n, l, |k| polys[k as usize].clone(), false),
                    weighted_sum(m, n, l, |k| polys[k as usize].translate(&one), true),
                )
            } else {
                let z = RatPoly::var();
                let z1 = &z + &RatPoly::one();
                (
                    weighted_sum(m, n, l, |k| z.pow(k), false),
                    weighted_sum(m, n, l, |k| z1.pow(k), true),
                )
            };
            let diff = &lhs - &rhs;
            chk.holds("polynomial identity", diff.is_zero(), || {
                format!("difference {diff}")
            });

            if !euler {
                for j in 0..=m.min(n) {
                    let left = binomial(m - j + l, n - j);
                    let right: BigInt = (0..=m - j)
                        .map(|k| {
                            binomial(m - j, k)
                                * binom(l, i64::from(n) - i64::from(k) - i64::from(j))
                        })
                        .sum();
                    chk.holds(&format!("chu-vandermonde j={j}"), left == right, || {
                        format!("{left} vs {right}")
                    });
                }
            }
            Ok(())
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn b_examples() {
        assert_eq!(b_coefficient(2, 0), BigInt::from(2));
        assert_eq!(b_coefficient(4, 2), BigInt::zero());
        assert_eq!(b_coefficient(4, 0), BigInt::from(8));
        assert_eq!(b_coefficient(4, 4), BigInt::from(8));
    }

    /// Direct summation over `k` in steps of two, independent of the parity filter.
    fn trinomial_by_steps(n: u32, i: u32, j: u32) -> BigInt {
        (0..=n)
            .map(|k| binomial(2 * n, 2 * k) * binomial(2 * k, i) * binomial(2 * n - 2 * k, j))
            .sum()
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(trinomial_sum(4, 2, 2), BigInt::from(6));
        assert_eq!(trinomial_by_steps(2, 2, 2), BigInt::from(6));
        for n in 1..=6 {
            for i in 0..=2 * n {
                for j in 0..=2 * n {
                    assert_eq!(trinomial_sum(2 * n, i, j), trinomial_by_steps(n, i, j));
                }
            }
        }
    }

    #[test]
    fn sums_pass_both_parities() {
        for n in 1..=5 {
            let r = combinatorial_sums(n);
            assert!(r.passed(), "{}", r.witness);
        }
        for n in 0..=5 {
            let r = combinatorial_sums_odd(n);
            assert!(r.passed(), "{}", r.witness);
        }
        assert!(!combinatorial_sums(0).passed());
    }

    #[test]
    fn binomial_examples() {
        // m = n = l = 1: both sides z + 2
        let z = RatPoly::var();
        let lhs = weighted_sum(1, 1, 1, |k| z.pow(k), false);
        assert_eq!(lhs, RatPoly::from_rationals(&[int(2), int(1)]));
        assert!(verify_binomial(1, 1, 1, false).passed());
        assert!(verify_binomial(5, 0, 3, false).passed());
        assert!(verify_binomial(6, 6, 6, true).passed());
    }
}
