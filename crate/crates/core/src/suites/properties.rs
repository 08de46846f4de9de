//! Structural invariants of the Euler and Bernoulli sequences.

use num::{One, Zero};

use crate::arith::{binomial_q, int, pow2, GaussianRational, Rational};
use crate::poly::RatPoly;
use crate::report::{Check, VerificationReport};
use crate::sequences::{
    bernoulli_numbers, euler_number, euler_polynomial, euler_zero_values, solve_midpoint,
};

/// Largest degree for the linear-solve cross-check.
pub const SOLVE_LIMIT: u32 = 12;

/// `P(1 − x)`.
fn reflect(p: &RatPoly) -> RatPoly {
    let one_minus_x = RatPoly::from_rationals(&[int(1), int(-1)]);
    p.terms().fold(RatPoly::zero(), |acc, (k, c)| {
        &acc + &one_minus_x.pow(k).scale(c)
    })
}

/// For every `n ≤ max_n`: midpoint `E_n(x) + E_n(x+1) = 2xⁿ`, Appell
/// `E_n' = n E_{n−1}`, reflection `E_n(1−x) = (−1)ⁿ E_n(x)`, the
/// characterization `v_k + Σ_{l≥1} C(k,l) v_l = 1` of `v_k = −E_k(0)`, the
/// bridge `E_k(0) = −2(2^{k+1}−1) B_{k+1}/(k+1)`, integrality of the Euler
/// numbers, and agreement with the direct linear solve up to degree 12.
pub fn sequence_properties(max_n: u32) -> VerificationReport {
    Check::new("sequences")
        .param("properties", max_n)
        .run(|chk| {
            let one = GaussianRational::one();
            let e0 = euler_zero_values(max_n);
            let b = bernoulli_numbers(max_n + 1);
            let polys: Vec<RatPoly> = (0..=max_n).map(euler_polynomial).collect();

            for n in 0..=max_n {
                let e = &polys[n as usize];
                let mid = e + &e.translate(&one);
                let target = RatPoly::monomial(n, GaussianRational::from_int(2));
                chk.holds(&format!("midpoint n={n}"), mid == target, || {
                    format!("{mid}")
                });

                if n > 0 {
                    let expected = polys[n as usize - 1].scale_rat(&int(i64::from(n)));
                    let got = e.derivative();
                    chk.holds(&format!("appell n={n}"), got == expected, || {
                        format!("{got} vs {expected}")
                    });
                }

                let reflected = reflect(e);
                let expected = if n % 2 == 0 { e.clone() } else { -e };
                chk.holds(&format!("reflection n={n}"), reflected == expected, || {
                    format!("{reflected}")
                });

                if n > 0 {
                    let v = |l: u32| -&e0[l as usize];
                    let total: Rational =
                        v(n) + (1..=n).map(|l| binomial_q(n, l) * v(l)).sum::<Rational>();
                    chk.holds(&format!("characterization k={n}"), total.is_one(), || {
                        total.to_string()
                    });
                }

                let bridge =
                    int(-2) * (pow2(n + 1) - int(1)) * &b[n as usize + 1] / int(i64::from(n) + 1);
                chk.holds(
                    &format!("bernoulli bridge k={n}"),
                    bridge == e0[n as usize],
                    || format!("{bridge} vs {}", e0[n as usize]),
                );

                let number = euler_number(n);
                let ok = number.is_integer() && (n % 2 == 0 || number.is_zero());
                chk.holds(&format!("euler number n={n}"), ok, || number.to_string());

                if n <= SOLVE_LIMIT {
                    let solved = solve_midpoint(n);
                    chk.holds(&format!("linear solve n={n}"), &solved == e, || {
                        format!("{solved}")
                    });
                }
            }
            Ok(())
        })
}
