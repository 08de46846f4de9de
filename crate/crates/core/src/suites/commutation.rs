//! Commutators versus anti-commutators of functions of `p` and `q`, with `c`
//! kept formal.

use num::Zero;
use serde_json::json;

use super::{c_term, p_scaled, q_scaled};
use crate::arith::{binomial_q, factorial_q, int, pow2, rat, Rational};
use crate::poly::RatPoly;
use crate::random::{case_rng, random_poly};
use crate::realization::{apply_element, monomial_commutator_action, XPoly};
use crate::report::{Check, VerificationReport};
use crate::sequences::{bernoulli_numbers, euler_zero_values};
use crate::weyl::{anticommutator, commutator, normal_mul, WeylElement};

fn sign(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// `[pⁿ/n!, qᵐ/m!] = −Σ_{k=1}^{min(m,n)} cᵏ E_k(0)/k! {p^{n−k}/(n−k)!, q^{m−k}/(m−k)!}`,
/// cross-checked through the polynomial action on `xˡ`.
pub fn verify_convolution(n: u32, m: u32) -> VerificationReport {
    Check::new("pain").param("n", n).param("m", m).run(|chk| {
        let e0 = euler_zero_values(n.min(m));
        let lhs = commutator(&p_scaled(n), &q_scaled(m));
        let rhs: WeylElement = (1..=n.min(m))
            .map(|k| {
                let weight = -&e0[k as usize] / factorial_q(k);
                anticommutator(&p_scaled(n - k), &q_scaled(m - k)).scale(&c_term(k, weight))
            })
            .sum();
        chk.elements("convolution", &lhs, &rhs);

        for l in n..=(n + 4).max(10) {
            let (coeff, degree) = monomial_commutator_action(n, m, l)?;
            let got = apply_element(&rhs, &XPoly::monomial(l));
            let expected = XPoly::term(degree, coeff);
            chk.holds(&format!("action on x^{l}"), got == expected, || {
                format!("{got} vs {expected}")
            });

            // C(m+l,n) − C(l,n) = −Σ_k E_k(0) C(m,k) (C(m−k+l, n−k) + C(l, n−k))
            let left = binomial_q(m + l, n) - binomial_q(l, n);
            let right: Rational = (1..=n.min(m))
                .map(|k| {
                    -&e0[k as usize]
                        * binomial_q(m, k)
                        * (binomial_q(m - k + l, n - k) + binomial_q(l, n - k))
                })
                .sum();
            chk.holds(&format!("scalar form l={l}"), left == right, || {
                format!("{left} vs {right}")
            });
        }
        Ok(())
    })
}

/// The inverse relation with Bernoulli numbers, and the rewriting of the
/// forward relation through `E_k(0) = −2(2^{k+1} − 1)B_{k+1}/(k+1)`.
pub fn verify_reciprocal(n: u32, m: u32) -> VerificationReport {
    Check::new("reciprocal")
        .param("n", n)
        .param("m", m)
        .run(|chk| {
            let top = n.min(m);
            let b = bernoulli_numbers(top + 1);
            let ratio = |k: u32| &b[k as usize + 1] / int(i64::from(k) + 1);

            let lhs = anticommutator(&p_scaled(n), &q_scaled(m));
            let lead = commutator(&p_scaled(n + 1), &q_scaled(m + 1))
                .div_c()?
                .scale_rat(&int(2));
            let tail: WeylElement = (1..=top)
                .map(|k| {
                    let weight = int(2) * ratio(k) / factorial_q(k);
                    commutator(&p_scaled(n - k), &q_scaled(m - k)).scale(&c_term(k, weight))
                })
                .sum();
            chk.elements("reciprocal", &lhs, &(&lead + &tail));

            let comm = commutator(&p_scaled(n), &q_scaled(m));
            let rewritten: WeylElement = (1..=top)
                .map(|k| {
                    let weight = int(2) * (pow2(k + 1) - int(1)) * ratio(k) / factorial_q(k);
                    anticommutator(&p_scaled(n - k), &q_scaled(m - k)).scale(&c_term(k, weight))
                })
                .sum();
            chk.elements("bernoulli rewriting", &comm, &rewritten);
            Ok(())
        })
}

/// `Σ_{a+b=N, a=n} pᵃqᵇ-words / N!`: the `uⁿvᵐ` coefficient of `e^{up+vq}`.
fn symmetrized_words(n: u32, m: u32) -> WeylElement {
    let p = WeylElement::p();
    let q = WeylElement::q();
    // row[j] holds the sum of all words with i p's and j q's
    let mut row: Vec<WeylElement> = Vec::with_capacity(m as usize + 1);
    row.push(WeylElement::one());
    for j in 1..=m {
        let next = normal_mul(&q, &row[j as usize - 1]);
        row.push(next);
    }
    for _ in 1..=n {
        let mut next: Vec<WeylElement> = Vec::with_capacity(m as usize + 1);
        next.push(normal_mul(&p, &row[0]));
        for j in 1..=m as usize {
            let w = &normal_mul(&p, &row[j]) + &normal_mul(&q, &next[j - 1]);
            next.push(w);
        }
        row = next;
    }
    row.pop()
        .expect("nonempty")
        .scale_rat(&factorial_q(n + m).recip())
}

/// Coefficient of `uⁿvᵐ` in
/// `[e^{up}, e^{vq}] = (1 − e^{−z}) e^{up}e^{vq}`,
/// `{e^{up}, e^{vq}} = (1 + e^{−z}) e^{up}e^{vq}` (`z = cuv`), and in the
/// BCH forms `e^{up+vq} = e^{−z/2} e^{up}e^{vq} = e^{z/2} e^{vq}e^{up}`.
pub fn verify_exp_series(n: u32, m: u32) -> VerificationReport {
    Check::new("exp-series")
        .param("n", n)
        .param("m", m)
        .run(|chk| {
            let top = n.min(m);
            let ordered = |k: u32| normal_mul(&p_scaled(n - k), &q_scaled(m - k));
            let weight =
                |k: u32, base: Rational| c_term(k, num::pow(base, k as usize) / factorial_q(k));

            let comm: WeylElement = (1..=top)
                .map(|k| ordered(k).scale(&weight(k, int(-1))).scale_rat(&int(-1)))
                .sum();
            chk.elements("commutator", &commutator(&p_scaled(n), &q_scaled(m)), &comm);

            let anti: WeylElement = (0..=top)
                .map(|k| {
                    let base = ordered(k).scale(&weight(k, int(-1)));
                    if k == 0 {
                        base.scale_rat(&int(2))
                    } else {
                        base
                    }
                })
                .sum();
            chk.elements(
                "anti-commutator",
                &anticommutator(&p_scaled(n), &q_scaled(m)),
                &anti,
            );

            let words = symmetrized_words(n, m);
            let left: WeylElement = (0..=top)
                .map(|k| ordered(k).scale(&weight(k, rat(-1, 2))))
                .sum();
            chk.elements("bch p-first", &words, &left);
            let right: WeylElement = (0..=top)
                .map(|k| {
                    normal_mul(&q_scaled(m - k), &p_scaled(n - k)).scale(&weight(k, rat(1, 2)))
                })
                .sum();
            chk.elements("bch q-first", &words, &right);
            Ok(())
        })
}

/// Recovers `v_1, …, v_K` from the scalar parts of `[pᵏ/k!, qᵏ/k!]` and
/// `{pᵏ/k!, qᵏ/k!}` by dividing their generating series in `z = cuv`.
pub fn extract_generating_coefficients(k_max: u32) -> Vec<Rational> {
    let scalar = |w: &WeylElement, k: u32| -> Rational {
        let coeff = w.coeff(0, 0).coeff(k);
        debug_assert!(coeff.is_real());
        coeff.re().clone()
    };
    let comm: Vec<Rational> = (0..=k_max)
        .map(|k| scalar(&commutator(&p_scaled(k), &q_scaled(k)), k))
        .collect();
    let anti: Vec<Rational> = (0..=k_max)
        .map(|k| scalar(&anticommutator(&p_scaled(k), &q_scaled(k)), k))
        .collect();
    // comm = V · anti as power series; V_k = v_k / k!
    let mut series: Vec<Rational> = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max as usize {
        let known: Rational = (0..k).map(|j| &series[j] * &anti[k - j]).sum();
        series.push((&comm[k] - known) / &anti[0]);
    }
    series
        .into_iter()
        .enumerate()
        .map(|(k, v)| v * factorial_q(k as u32))
        .collect()
}

/// `v_k = −E_k(0)` for `1 ≤ k ≤ k_max`, and `v_0 = 0`.
pub fn verify_generating_coefficients(k_max: u32) -> VerificationReport {
    Check::new("exp-series").param("k_max", k_max).run(|chk| {
        let v = extract_generating_coefficients(k_max);
        let e0 = euler_zero_values(k_max);
        chk.holds("v_0", v[0].is_zero(), || v[0].to_string());
        for k in 1..=k_max as usize {
            let expected = -&e0[k];
            chk.holds(&format!("v_{k}"), v[k] == expected, || {
                format!("{} vs {expected}", v[k])
            });
        }
        chk.set_data(json!({ "v": v.iter().map(ToString::to_string).collect::<Vec<_>>() }));
        Ok(())
    })
}

struct Derivatives {
    f: Vec<WeylElement>,
    g: Vec<WeylElement>,
}

impl Derivatives {
    fn new(f: &RatPoly, g: &RatPoly) -> Self {
        let top = f.degree().unwrap_or(0).min(g.degree().unwrap_or(0));
        let f = (0..=top)
            .map(|k| WeylElement::poly_in_p(&f.nth_derivative(k)))
            .collect();
        let g = (0..=top)
            .map(|k| WeylElement::poly_in_q(&g.nth_derivative(k)))
            .collect();
        Self { f, g }
    }

    fn top(&self) -> u32 {
        self.f.len() as u32 - 1
    }

    fn product(&self, k: u32) -> WeylElement {
        normal_mul(&self.f[k as usize], &self.g[k as usize])
    }

    fn comm(&self, k: u32) -> WeylElement {
        commutator(&self.f[k as usize], &self.g[k as usize])
    }

    fn anti(&self, k: u32) -> WeylElement {
        anticommutator(&self.f[k as usize], &self.g[k as usize])
    }
}

/// `[f(p), g(q)] = −Σ_{k≥1} (−c)ᵏ/k! f⁽ᵏ⁾(p) g⁽ᵏ⁾(q)`.
pub fn verify_reordering(f: &RatPoly, g: &RatPoly) -> VerificationReport {
    Check::new("mccoy")
        .param("f", f.to_string())
        .param("g", g.to_string())
        .run(|chk| {
            reordering_body(chk, f, g);
            Ok(())
        })
}

fn reordering_body(chk: &mut Check, f: &RatPoly, g: &RatPoly) {
    let d = Derivatives::new(f, g);
    let rhs: WeylElement = (1..=d.top())
        .map(|k| d.product(k).scale(&c_term(k, -sign(k) / factorial_q(k))))
        .sum();
    chk.elements("mccoy", &d.comm(0), &rhs);
}

/// The five expansions of `[f(p), g(q)]`, `{f(p), g(q)}` and `f(p)g(q)`
/// in terms of derivatives, with `F`, `G` the antiderivatives vanishing at 0.
pub fn verify_function_identities(f: &RatPoly, g: &RatPoly) -> VerificationReport {
    Check::new("functions")
        .param("f", f.to_string())
        .param("g", g.to_string())
        .run(|chk| functions_body(chk, f, g))
}

fn functions_body(chk: &mut Check, f: &RatPoly, g: &RatPoly) -> crate::error::Result<()> {
    let d = Derivatives::new(f, g);
    let top = d.top();
    let e0 = euler_zero_values(top);
    let b = bernoulli_numbers(top + 1);
    let ratio = |k: u32| &b[k as usize + 1] / int(i64::from(k) + 1);
    let comm = d.comm(0);
    let anti = d.anti(0);
    let prod = d.product(0);
    let big = commutator(
        &WeylElement::poly_in_p(&f.antiderivative()),
        &WeylElement::poly_in_q(&g.antiderivative()),
    )
    .div_c()?;

    let rhs: WeylElement = (1..=top)
        .map(|k| {
            d.anti(k)
                .scale(&c_term(k, -&e0[k as usize] / factorial_q(k)))
        })
        .sum();
    chk.elements("commutator via euler", &comm, &rhs);

    let tail: WeylElement = (1..=top)
        .map(|k| {
            d.comm(k)
                .scale(&c_term(k, int(2) * ratio(k) / factorial_q(k)))
        })
        .sum();
    chk.elements(
        "anti-commutator via bernoulli",
        &anti,
        &(&big.scale_rat(&int(2)) + &tail),
    );

    let obvious: WeylElement = (1..=top)
        .map(|k| d.product(k).scale(&c_term(k, sign(k) / factorial_q(k))))
        .sum();
    chk.elements(
        "anti-commutator expansion",
        &anti,
        &(&prod.scale_rat(&int(2)) + &obvious),
    );

    let tail: WeylElement = (0..=top)
        .map(|k| {
            d.comm(k)
                .scale(&c_term(k, ratio(k) * sign(k) / factorial_q(k)))
        })
        .sum();
    chk.elements("product via bernoulli", &prod, &(&big - &tail));

    let half = rat(1, 2);
    let euler: WeylElement = (0..=top)
        .map(|k| {
            d.anti(k).scale(&c_term(
                k,
                &half * &e0[k as usize] * sign(k) / factorial_q(k),
            ))
        })
        .sum();
    chk.elements("product via euler", &prod, &euler);

    reordering_body(chk, f, g);
    Ok(())
}

fn fixed_pairs() -> Vec<(RatPoly, RatPoly)> {
    let x = RatPoly::var();
    let x2 = RatPoly::monomial(2, int(1).into());
    let g = RatPoly::from_rationals(&[int(3), int(-1), int(0), int(2)]);
    vec![(x.clone(), x), (x2.clone(), x2), (RatPoly::one(), g)]
}

fn random_pairs(seed: u64, cases: u32) -> Vec<(u64, RatPoly, RatPoly)> {
    (0..u64::from(cases))
        .map(|case| {
            let mut rng = case_rng(seed, case);
            let f = random_poly(&mut rng);
            let g = random_poly(&mut rng);
            (case, f, g)
        })
        .collect()
}

fn seeded(report: VerificationReport, seed: u64, case: u64) -> VerificationReport {
    let mut report = report;
    report.params.insert("seed".into(), seed.into());
    report.params.insert("case".into(), case.into());
    report
}

pub(crate) fn reordering_cases(seed: u64, cases: u32) -> Vec<VerificationReport> {
    use rayon::prelude::*;
    let mut out: Vec<_> = fixed_pairs()
        .iter()
        .map(|(f, g)| verify_reordering(f, g))
        .collect();
    out.par_extend(
        random_pairs(seed, cases)
            .into_par_iter()
            .map(|(case, f, g)| seeded(verify_reordering(&f, &g), seed, case)),
    );
    out
}

pub(crate) fn function_cases(seed: u64, cases: u32) -> Vec<VerificationReport> {
    use rayon::prelude::*;
    let mut out: Vec<_> = fixed_pairs()
        .iter()
        .map(|(f, g)| verify_function_identities(f, g))
        .collect();
    out.par_extend(
        random_pairs(seed, cases)
            .into_par_iter()
            .map(|(case, f, g)| seeded(verify_function_identities(&f, &g), seed, case)),
    );
    out
}
