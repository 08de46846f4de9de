//! Pseudo-Hermitian similarity: solving `h₀ − e^x h₀ e^{−x} = i(h₁ + e^x h₁ e^{−x})`
//! with Euler-weighted sums of `ad_x`, and the κ/λ coefficient tables.

use num::{One, Zero};
use serde_json::json;

use crate::arith::{binomial_q, factorial_q, int, pow2, rat, GaussianRational, Rational};
use crate::error::Result;
use crate::report::{Check, VerificationReport};
use crate::sequences::{euler_number, euler_polynomial, euler_zero_values};
use crate::weyl::{Algebra, WeylElement};

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub h0: WeylElement,
    pub x: WeylElement,
}

impl Fixture {
    pub fn parse(h0: &str, x: &str) -> Result<Self> {
        Ok(Self {
            h0: h0.parse()?,
            x: x.parse()?,
        })
    }
}

/// `(p², q)`, `((p²+q²)/2, q)`, `(p², q²)`, `((qp+pq)/2, q)`, and a scalar `h₀`.
pub fn default_fixtures() -> Vec<Fixture> {
    [
        ("1 * p^2", "1 * q"),
        ("1/2 * p^2 + 1/2 * q^2", "1 * q"),
        ("1 * p^2", "1 * q^2"),
        ("1 * q p + 1/2*c", "1 * q"),
        ("3", "1 * q + 1 * p"),
    ]
    .into_iter()
    .map(|(h0, x)| Fixture::parse(h0, x).expect("valid fixture"))
    .collect()
}

/// `(h₁, h)` with `h₁ = i h₀ − i Σ E_n(0)/n! ad_xⁿ h₀` and
/// `h = Σ E_n(½)/n! ad_xⁿ h₀`.
pub fn similarity_solution(
    h0: &WeylElement,
    x: &WeylElement,
) -> Result<(WeylElement, WeylElement)> {
    let alg = Algebra::formal();
    let iterates = alg.ad_iterates(x, h0)?;
    let (h1, h) = umbral_sums(&iterates);
    Ok((h1, h))
}

fn weighted(iterates: &[WeylElement], weights: &[Rational]) -> WeylElement {
    iterates
        .iter()
        .zip(weights)
        .enumerate()
        .map(|(n, (it, w))| it.scale_rat(&(w / factorial_q(n as u32))))
        .sum()
}

fn umbral_sums(iterates: &[WeylElement]) -> (WeylElement, WeylElement) {
    let Some(top) = iterates.len().checked_sub(1) else {
        return (WeylElement::zero(), WeylElement::zero());
    };
    let i = GaussianRational::i();
    let e0 = euler_zero_values(top as u32);
    let half = GaussianRational::real(rat(1, 2));
    let e_half: Vec<Rational> = (0..=top as u32)
        .map(|n| euler_polynomial(n).eval(&half).re().clone())
        .collect();
    let h1 = (&iterates[0] - &weighted(iterates, &e0)).scale_gauss(&i);
    let h = weighted(iterates, &e_half);
    (h1, h)
}

/// Checks, in formal `c`:
/// `h₀ − e^x h₀ e^{−x} = i(h₁ + e^x h₁ e^{−x})`,
/// `e^{x/2}(h₀ + i h₁)e^{−x/2} = Σ E_n(½)/n! ad_xⁿ h₀`, and the umbral
/// midpoint rule `Σ (E_n(0) + E_n(1))/n! ad_xⁿ h₀ = 2h₀`.
pub fn verify_similarity(h0: &WeylElement, x: &WeylElement) -> VerificationReport {
    Check::new("figueira")
        .param("h0", h0.to_string())
        .param("x", x.to_string())
        .run(|chk| {
            let alg = Algebra::formal();
            let i = GaussianRational::i();
            let iterates = alg.ad_iterates(x, h0)?;
            let (h1, h) = umbral_sums(&iterates);
            let one = int(1);

            let lhs = h0 - &alg.hadamard_conjugate(x, h0, &one)?;
            let rhs = (&h1 + &alg.hadamard_conjugate(x, &h1, &one)?).scale_gauss(&i);
            chk.elements("pseudo-hermiticity", &lhs, &rhs);

            let similar = alg.hadamard_conjugate(x, &(h0 + &h1.scale_gauss(&i)), &rat(1, 2))?;
            chk.elements("similarity", &similar, &h);

            let top = iterates.len().saturating_sub(1) as u32;
            let e0 = euler_zero_values(top);
            let e1: Vec<Rational> = (0..=top)
                .map(|n| {
                    euler_polynomial(n)
                        .eval(&GaussianRational::one())
                        .re()
                        .clone()
                })
                .collect();
            let midpoint = &weighted(&iterates, &e0) + &weighted(&iterates, &e1);
            chk.elements("umbral midpoint", &midpoint, &h0.scale_rat(&int(2)));

            chk.set_data(json!({
                "h1": h1.to_string(),
                "h": h.to_string(),
                "nilpotency": iterates.len(),
            }));
            Ok(())
        })
}

/// `κ_0 = 0`, `κ_n = −E_n(0)`; `λ_n = 1 − Σ_m 2ᵐ C(n,m) κ_m`.
pub fn kappa_lambda(max_n: u32) -> (Vec<Rational>, Vec<Rational>) {
    let e0 = euler_zero_values(max_n);
    let kappa: Vec<Rational> = e0
        .iter()
        .enumerate()
        .map(|(n, e)| if n == 0 { Rational::zero() } else { -e })
        .collect();
    let lambda = (0..=max_n)
        .map(|n| {
            let sum: Rational = (0..=n)
                .map(|m| pow2(m) * binomial_q(n, m) * &kappa[m as usize])
                .sum();
            Rational::one() - sum
        })
        .collect();
    (kappa, lambda)
}

/// κ vanishes at even indices and matches the published odd values (with
/// `κ_9 = 31/2`); λ equals the Euler numbers, hence vanishes at odd indices.
pub fn sequence_tables(max_n: u32) -> VerificationReport {
    Check::new("sequences").param("max_n", max_n).run(|chk| {
        let (kappa, lambda) = kappa_lambda(max_n);
        for n in (0..=max_n as usize).step_by(2) {
            chk.holds(&format!("kappa_{n}"), kappa[n].is_zero(), || {
                kappa[n].to_string()
            });
        }
        let published = [
            (1, rat(1, 2)),
            (3, rat(-1, 4)),
            (5, rat(1, 2)),
            (7, rat(-17, 8)),
            (9, rat(31, 2)),
        ];
        for (n, value) in published.iter().filter(|(n, _)| *n <= max_n as usize) {
            chk.holds(&format!("kappa_{n}"), &kappa[*n] == value, || {
                format!("{} vs {value}", kappa[*n])
            });
        }
        for n in 0..=max_n {
            let expected = euler_number(n);
            let got = &lambda[n as usize];
            chk.holds(&format!("lambda_{n}"), *got == expected, || {
                format!("{got} vs {expected}")
            });
        }
        let render = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        chk.set_data(json!({ "kappa": render(&kappa), "lambda": render(&lambda) }));
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::poly::CPoly;

    #[test]
    fn hand_computed_fixture() {
        let h0: WeylElement = "1 * p^2".parse().unwrap();
        let (h1, h) = similarity_solution(&h0, &WeylElement::q()).unwrap();
        // h₁ = −i c p
        let minus_i = -GaussianRational::i();
        assert_eq!(h1, WeylElement::term(0, 1, CPoly::monomial(1, minus_i)));
        // h = p² − c²/4
        let expected: WeylElement = "1 * p^2 + -1/4*c^2".parse().unwrap();
        assert_eq!(h, expected);
        // both sides of the pseudo-Hermiticity condition equal 2cp − c²
        let alg = Algebra::formal();
        let lhs = &h0
            - &alg
                .hadamard_conjugate(&WeylElement::q(), &h0, &int(1))
                .unwrap();
        assert_eq!(lhs, "2*c * p + -c^2".parse::<WeylElement>().unwrap());
    }

    #[test]
    fn scalar_h0_is_fixed() {
        let h0 = WeylElement::from_rational(int(3));
        let x: WeylElement = "1 * q + 1 * p".parse().unwrap();
        let (h1, h) = similarity_solution(&h0, &x).unwrap();
        assert!(h1.is_zero());
        assert_eq!(h, h0);
    }

    #[test]
    fn default_fixtures_pass() {
        for f in default_fixtures() {
            let report = verify_similarity(&f.h0, &f.x);
            assert!(report.passed(), "{:?}: {}", report.params, report.witness);
        }
    }

    #[test]
    fn non_nilpotent_generator_is_an_error() {
        let h0: WeylElement = "1 * p^2".parse().unwrap();
        let x: WeylElement = "1 * q p".parse().unwrap();
        assert!(matches!(
            similarity_solution(&h0, &x),
            Err(Error::NonTerminatingSeries { .. })
        ));
        let report = verify_similarity(&h0, &x);
        assert_eq!(report.status, crate::report::Status::Error);
    }

    #[test]
    fn tables() {
        let (kappa, lambda) = kappa_lambda(16);
        assert_eq!(kappa[1], rat(1, 2));
        assert_eq!(kappa[7], rat(-17, 8));
        assert_eq!(kappa[9], rat(31, 2));
        assert_eq!(lambda[6], int(-61));
        let report = sequence_tables(16);
        assert!(report.passed(), "{}", report.witness);
        let data = report.data.unwrap();
        assert_eq!(data["kappa"][0], "0");
        assert_eq!(data["kappa"][1], "1/2");
        assert_eq!(data["kappa"][3], "-1/4");
    }
}
