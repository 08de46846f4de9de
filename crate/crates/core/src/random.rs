//! Seeded generators for randomized instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{int, GaussianRational};
use crate::poly::{CPoly, RatPoly};
use crate::weyl::WeylElement;

pub const MAX_DEGREE: u32 = 4;
pub const COEFF_BOUND: i64 = 5;

/// Independent stream per `(seed, case)` pair.
pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

fn coeff(rng: &mut impl Rng) -> i64 {
    rng.random_range(-COEFF_BOUND..=COEFF_BOUND)
}

/// Degree ≤ 4, integer coefficients in `[−5, 5]`.
pub fn random_poly(rng: &mut impl Rng) -> RatPoly {
    let degree = rng.random_range(0..=MAX_DEGREE);
    let dense: Vec<_> = (0..=degree).map(|_| int(coeff(rng))).collect();
    RatPoly::from_rationals(&dense)
}

/// Element of total degree ≤ 4 with Gaussian-integer coefficients that may
/// carry powers of `c`.
pub fn random_element(rng: &mut impl Rng) -> WeylElement {
    let mut terms = Vec::new();
    for a in 0..=MAX_DEGREE {
        for b in 0..=MAX_DEGREE - a {
            if rng.random_bool(0.5) {
                continue;
            }
            let g = GaussianRational::new(int(coeff(rng)), int(coeff(rng)));
            let k = rng.random_range(0..=2);
            terms.push(((a, b), CPoly::monomial(k, g)));
        }
    }
    WeylElement::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = random_poly(&mut case_rng(7, 3));
        let b = random_poly(&mut case_rng(7, 3));
        assert_eq!(a, b);
        let x = random_element(&mut case_rng(7, 3));
        let y = random_element(&mut case_rng(7, 3));
        assert_eq!(x, y);
    }

    #[test]
    fn within_bounds() {
        for case in 0..50 {
            let f = random_poly(&mut case_rng(1, case));
            assert!(f.degree().unwrap_or(0) <= MAX_DEGREE);
            for (_, c) in f.terms() {
                assert!(num::Signed::abs(c.re()) <= int(COEFF_BOUND));
            }
            let w = random_element(&mut case_rng(1, case));
            assert!(w.degree().unwrap_or(0) <= MAX_DEGREE);
        }
    }
}
