//! Cross-checks of the symbolic engine against the two concrete realizations.

use serde_json::json;

use crate::error::{Error, Result};
use crate::hermite::{
    check_element_against_matrix, check_main_identity, check_nested_anticomm_closed_form,
    check_shifted_expansions, OscillatorMatrices,
};
use crate::random::{case_rng, random_element};
use crate::realization::{apply_element, recover_element, XPoly};
use crate::report::{Check, VerificationReport};
use crate::weyl::{commutator, normal_mul, Hamiltonian, WeylElement};

type NamedCheck<'a> = (&'static str, Box<dyn Fn() -> Result<f64> + 'a>);

/// Numeric checks for one `n` on the truncated Hermite basis: the closed
/// form of `{q,H}_n`, the main identity, both shifted expansions, and the
/// symbolic `{q,H}_n` and `{q,Hⁿ}` evaluated on each `ψ_l`.
pub fn verify_hermite(n: u32, ops: &OscillatorMatrices, tol: f64) -> VerificationReport {
    Check::new("hermite")
        .param("n", n)
        .param("dim", ops.dim)
        .param("tol", tol)
        .run(|chk| {
            let ham = Hamiltonian::new();
            let alg = ham.algebra();
            let q = WeylElement::q();
            let symbolic_nested = ham.nested_anticomm_q(n);
            let symbolic_power = alg.anticommutator(&q, &alg.pow(ham.element(), n));

            let checks: [NamedCheck<'_>; 5] = [
                (
                    "closed form",
                    Box::new(|| check_nested_anticomm_closed_form(n, ops.dim, tol)),
                ),
                (
                    "main identity",
                    Box::new(|| check_main_identity(n, ops, tol)),
                ),
                (
                    "shifted expansions",
                    Box::new(|| check_shifted_expansions(n, ops, tol)),
                ),
                (
                    "symbolic nested",
                    Box::new(|| {
                        check_element_against_matrix(
                            n,
                            &symbolic_nested,
                            &ops.nested_anticomm(n),
                            tol,
                        )
                    }),
                ),
                (
                    "symbolic power",
                    Box::new(|| {
                        check_element_against_matrix(
                            n,
                            &symbolic_power,
                            &ops.anticomm_with_h_power(n),
                            tol,
                        )
                    }),
                ),
            ];
            let mut worst = 0.0f64;
            for (label, check) in checks {
                match check() {
                    Ok(err) => worst = worst.max(err),
                    Err(e @ Error::ToleranceExceeded { .. }) => {
                        chk.holds(label, false, || e.to_string());
                    }
                    Err(e) => return Err(e),
                }
            }
            chk.set_data(json!({ "max_rel_error": worst }));
            Ok(())
        })
}

/// Random elements `a`, `b` (degree ≤ 4): the normal-ordered product and
/// commutator act on `xˡ` as the composed actions, and the product is
/// recovered exactly from its actions.
pub fn verify_realization(seed: u64, case: u64, max_l: u32) -> VerificationReport {
    Check::new("oracles")
        .param("seed", seed)
        .param("case", case)
        .param("max_l", max_l)
        .run(|chk| {
            let mut rng = case_rng(seed, case);
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let product = normal_mul(&a, &b);
            let comm = commutator(&a, &b);
            let mut actions = Vec::new();
            for l in 0..=max_l {
                let x = XPoly::monomial(l);
                let ax_bx = apply_element(&a, &apply_element(&b, &x));
                let bx_ax = apply_element(&b, &apply_element(&a, &x));
                let direct = apply_element(&product, &x);
                chk.holds(&format!("product on x^{l}"), direct == ax_bx, || {
                    format!("{direct} vs {ax_bx}")
                });
                let via_comm = apply_element(&comm, &x);
                let composed = ax_bx.sub(&bx_ax);
                chk.holds(
                    &format!("commutator on x^{l}"),
                    via_comm == composed,
                    || format!("{via_comm} vs {composed}"),
                );
                actions.push(direct);
            }
            let max_p = product.terms().map(|((_, p), _)| p).max().unwrap_or(0);
            if max_p <= max_l {
                let recovered = recover_element(&actions)?;
                chk.elements("recovery", &recovered, &product);
            }
            Ok(())
        })
}
