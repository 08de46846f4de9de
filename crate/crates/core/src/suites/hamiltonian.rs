//! Nested anti-commutators of `q` with the oscillator Hamiltonian.

use serde_json::json;

use crate::arith::{binomial_q, int, pow2, rat, GaussianRational, Rational};
use crate::report::{Check, VerificationReport};
use crate::sequences::{euler_polynomial, shifted_euler};
use crate::weyl::{Hamiltonian, WeylElement};

/// Checks the three equivalent forms for one `n`:
///
/// ```text
/// 2⁻ⁿ {q, H}_n                      = ½{q, E_n(H + ½)}
/// 2⁻ⁿ {q, H − ½}_n                  = ½{q, E_n(H)}
/// 2⁻ⁿ [({q,H} − 1)_n + ({q,H} + 1)_n] = {q, Hⁿ}
/// ```
///
/// plus the shift rule `{q, H + a/2}_n = ({q,H} + a)_n` for `a = ±1`.
pub fn verify_hamiltonian_identity(n: u32) -> VerificationReport {
    Check::new("bender").param("n", n).run(|chk| {
        let ham = Hamiltonian::new();
        let alg = ham.algebra();
        let h = ham.element();
        let q = WeylElement::q();
        let half = rat(1, 2);
        let inv = pow2(n).recip();

        let shifted = shifted_euler(n);
        let nested = ham.nested_anticomm_q(n);
        let rhs = alg.anticommutator(&q, &alg.poly_of_element(&shifted, h));
        chk.elements(
            "midpoint form",
            &nested.scale_rat(&inv),
            &rhs.scale_rat(&half),
        );

        let below = alg.nested_anticommutator(&q, &ham.shifted(&-half.clone()), n);
        let rhs = alg.anticommutator(&q, &alg.poly_of_element(&euler_polynomial(n), h));
        chk.elements(
            "shifted form",
            &below.scale_rat(&inv),
            &rhs.scale_rat(&half),
        );

        let minus = ham.shifted_nested_anticomm(&int(-1), n);
        let plus = ham.shifted_nested_anticomm(&int(1), n);
        let rhs = alg.anticommutator(&q, &alg.pow(h, n));
        chk.elements("main identity", &(&minus + &plus).scale_rat(&inv), &rhs);

        let above = alg.nested_anticommutator(&q, &ham.shifted(&half), n);
        chk.elements("shift rule a=-1", &below, &minus);
        chk.elements("shift rule a=+1", &above, &plus);

        let coefficients: Vec<String> =
            (0..=n).map(|k| shifted.coeff(k).re().to_string()).collect();
        chk.set_data(json!({ "polynomial": coefficients }));
        Ok(())
    })
}

/// Superoperators `A(x) = [x, H]` and `B(x) = {x, H}` applied to `q`, for
/// every `k ≤ max_k`:
///
/// - `Aᵏq` alternates between `q` and `i·p`; `Bᵏq = Σ_j C(k,j) Hʲ q Hᵏ⁻ʲ`
/// - `(A+B)ᵏq = 2ᵏ q Hᵏ` and `(A−B)ᵏq = (−2)ᵏ Hᵏ q`
/// - `A` and `B` commute on every iterate
/// - `Σ_{k ≡ N mod 2} C(N,k) Bᵏ A^{N−k} q = 2^{N−1}{q, Hᴺ}` for `N ≥ 1`
pub fn verify_superoperators(max_k: u32) -> VerificationReport {
    Check::new("superoperators")
        .param("max_k", max_k)
        .run(|chk| {
            let ham = Hamiltonian::new();
            let alg = ham.algebra();
            let h = ham.element();
            let a_op = |x: &WeylElement| alg.commutator(x, h);
            let b_op = |x: &WeylElement| alg.anticommutator(x, h);

            let q = WeylElement::q();
            let ip = WeylElement::p().scale_gauss(&GaussianRational::i());
            let h_pow: Vec<WeylElement> = (0..=max_k)
                .scan(WeylElement::one(), |acc, _| {
                    let cur = acc.clone();
                    *acc = alg.mul(acc, h);
                    Some(cur)
                })
                .collect();

            let mut a_iter = q.clone();
            let mut b_iters = vec![q.clone()];
            let mut sum_iter = q.clone();
            let mut diff_iter = q.clone();
            for k in 0..=max_k {
                let expected_a = if k % 2 == 0 { &q } else { &ip };
                chk.elements(&format!("A^{k} q"), &a_iter, expected_a);

                let b_iter = &b_iters[k as usize];
                let expansion: WeylElement = (0..=k)
                    .map(|j| {
                        let term =
                            alg.mul(&alg.mul(&h_pow[j as usize], &q), &h_pow[(k - j) as usize]);
                        term.scale_rat(&binomial_q(k, j))
                    })
                    .sum();
                chk.elements(&format!("B^{k} q"), b_iter, &expansion);

                let scale = pow2(k);
                let expected_sum = alg.mul(&q, &h_pow[k as usize]).scale_rat(&scale);
                chk.elements(&format!("(A+B)^{k} q"), &sum_iter, &expected_sum);
                let sign: Rational = if k % 2 == 0 { scale } else { -scale };
                let expected_diff = alg.mul(&h_pow[k as usize], &q).scale_rat(&sign);
                chk.elements(&format!("(A-B)^{k} q"), &diff_iter, &expected_diff);

                chk.elements(
                    &format!("AB = BA on B^{k} q"),
                    &a_op(&b_op(b_iter)),
                    &b_op(&a_op(b_iter)),
                );

                if k >= 1 {
                    let route: WeylElement = (0..=k)
                        .filter(|j| (k - j) % 2 == 0)
                        .map(|j| b_iters[j as usize].scale_rat(&binomial_q(k, j)))
                        .sum();
                    let target = alg
                        .anticommutator(&q, &h_pow[k as usize])
                        .scale_rat(&pow2(k - 1));
                    chk.elements(&format!("operator route N={k}"), &route, &target);
                }

                if k < max_k {
                    a_iter = a_op(&a_iter);
                    b_iters.push(b_op(b_iter));
                    sum_iter = &a_op(&sum_iter) + &b_op(&sum_iter);
                    diff_iter = &a_op(&diff_iter) - &b_op(&diff_iter);
                }
            }
            Ok(())
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_pass() {
        for n in 0..=4 {
            let report = verify_hamiltonian_identity(n);
            assert!(report.passed(), "n={n}: {}", report.witness);
        }
    }

    #[test]
    fn second_order_polynomial() {
        let report = verify_hamiltonian_identity(2);
        assert_eq!(
            report.data.unwrap()["polynomial"],
            json!(["-1/4", "0", "1"])
        );
    }

    #[test]
    fn superoperator_lemma() {
        let report = verify_superoperators(6);
        assert!(report.passed(), "{}", report.witness);
    }

    #[test]
    fn naive_difference_power_fails_for_odd_order() {
        // (A − B)q = −2Hq, not 2Hq
        let ham = Hamiltonian::new();
        let alg = ham.algebra();
        let q = WeylElement::q();
        let diff = &alg.commutator(&q, ham.element()) - &alg.anticommutator(&q, ham.element());
        let naive = alg.mul(ham.element(), &q).scale_rat(&int(2));
        assert_eq!(diff, -naive);
    }
}
