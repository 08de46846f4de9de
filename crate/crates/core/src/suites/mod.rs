//! Verification suites over configurable parameter ranges.
//!
//! Each `verify_*` function checks one instance and returns a
//! [`VerificationReport`]; [`run_suite`] sweeps the configured range in
//! parallel and returns reports in instance order.

mod combinatorics;
mod commutation;
mod hamiltonian;
mod numeric;
mod properties;
mod similarity;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::arith::{factorial_q, GaussianRational, Rational};
use crate::error::Error;
use crate::poly::CPoly;
use crate::realization::ensure_kernel_validated;
use crate::report::{Check, VerificationReport};
use crate::weyl::WeylElement;

pub use combinatorics::{
    b_coefficient, combinatorial_sums, combinatorial_sums_odd, trinomial_sum, verify_binomial,
};
pub use commutation::{
    extract_generating_coefficients, verify_convolution, verify_exp_series,
    verify_function_identities, verify_generating_coefficients, verify_reciprocal,
    verify_reordering,
};
pub use hamiltonian::{verify_hamiltonian_identity, verify_superoperators};
pub use numeric::{verify_hermite, verify_realization};
pub use properties::sequence_properties;
pub use similarity::{
    default_fixtures, kappa_lambda, sequence_tables, similarity_solution, verify_similarity,
    Fixture,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Hamiltonian,
    Superoperators,
    Combinatorics,
    Convolution,
    Reciprocal,
    ExpSeries,
    Reordering,
    Functions,
    Binomial,
    Similarity,
    Sequences,
    Hermite,
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Hamiltonian,
        Suite::Superoperators,
        Suite::Combinatorics,
        Suite::Convolution,
        Suite::Reciprocal,
        Suite::ExpSeries,
        Suite::Reordering,
        Suite::Functions,
        Suite::Binomial,
        Suite::Similarity,
        Suite::Sequences,
        Suite::Hermite,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hamiltonian => "bender",
            Suite::Superoperators => "superoperators",
            Suite::Combinatorics => "combinatorics",
            Suite::Convolution => "pain",
            Suite::Reciprocal => "reciprocal",
            Suite::ExpSeries => "exp-series",
            Suite::Reordering => "mccoy",
            Suite::Functions => "functions",
            Suite::Binomial => "binomial",
            Suite::Similarity => "figueira",
            Suite::Sequences => "sequences",
            Suite::Hermite => "hermite",
            Suite::Oracles => "oracles",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

pub const DEFAULT_SEED: u64 = 20240229;
pub const DEFAULT_CASES: u32 = 100;

/// Range overrides; `None` means the per-suite default.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_n: Option<u32>,
    pub max_m: Option<u32>,
    pub max_l: Option<u32>,
    pub tol: f64,
    pub dim: usize,
    pub seed: u64,
    pub cases: u32,
    pub fixtures: Option<Vec<Fixture>>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_n: None,
            max_m: None,
            max_l: None,
            tol: crate::hermite::DEFAULT_TOL,
            dim: crate::hermite::DEFAULT_DIM,
            seed: DEFAULT_SEED,
            cases: DEFAULT_CASES,
            fixtures: None,
        }
    }
}

/// Per-suite default upper bounds `(n, m, l)`.
pub fn default_ranges(suite: Suite) -> (u32, u32, u32) {
    match suite {
        Suite::Hamiltonian | Suite::Superoperators => (12, 0, 0),
        Suite::Combinatorics => (8, 0, 0),
        Suite::Convolution | Suite::Reciprocal | Suite::ExpSeries => (10, 10, 0),
        Suite::Binomial => (12, 12, 12),
        Suite::Sequences => (16, 0, 0),
        Suite::Hermite => (8, 0, 0),
        Suite::Oracles => (0, 0, 8),
        Suite::Reordering | Suite::Functions | Suite::Similarity => (0, 0, 0),
    }
}

/// Runs one suite over its configured range.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<VerificationReport> {
    if let Err(msg) = ensure_kernel_validated() {
        let report = Check::new(suite.name())
            .param("stage", "kernel self-test")
            .abort(&Error::PreconditionViolation(msg));
        return vec![report];
    }
    let (dn, dm, dl) = default_ranges(suite);
    let max_n = cfg.max_n.unwrap_or(dn);
    let max_m = cfg.max_m.unwrap_or(dm);
    let max_l = cfg.max_l.unwrap_or(dl);
    let grid = |a: u32, b: u32| -> Vec<(u32, u32)> {
        (0..=a).flat_map(|x| (0..=b).map(move |y| (x, y))).collect()
    };

    match suite {
        Suite::Hamiltonian => (0..=max_n)
            .into_par_iter()
            .map(verify_hamiltonian_identity)
            .collect(),
        Suite::Superoperators => vec![verify_superoperators(max_n)],
        Suite::Combinatorics => (1..=max_n)
            .into_par_iter()
            .map(combinatorial_sums)
            .chain((0..=max_n).into_par_iter().map(combinatorial_sums_odd))
            .collect(),
        Suite::Convolution => grid(max_n, max_m)
            .into_par_iter()
            .map(|(n, m)| verify_convolution(n, m))
            .collect(),
        Suite::Reciprocal => grid(max_n, max_m)
            .into_par_iter()
            .map(|(n, m)| verify_reciprocal(n, m))
            .collect(),
        Suite::ExpSeries => {
            let mut out: Vec<_> = grid(max_n, max_m)
                .into_par_iter()
                .map(|(n, m)| verify_exp_series(n, m))
                .collect();
            out.push(verify_generating_coefficients(12));
            out
        }
        Suite::Reordering => commutation::reordering_cases(cfg.seed, cfg.cases),
        Suite::Functions => commutation::function_cases(cfg.seed, cfg.cases),
        Suite::Binomial => {
            let triples: Vec<(u32, u32, u32)> = (0..=max_m)
                .flat_map(|m| (0..=max_n).flat_map(move |n| (0..=max_l).map(move |l| (m, n, l))))
                .collect();
            triples
                .into_par_iter()
                .flat_map_iter(|(m, n, l)| {
                    [
                        verify_binomial(m, n, l, false),
                        verify_binomial(m, n, l, true),
                    ]
                })
                .collect()
        }
        Suite::Similarity => {
            let fixtures = cfg.fixtures.clone().unwrap_or_else(default_fixtures);
            fixtures
                .par_iter()
                .map(|f| verify_similarity(&f.h0, &f.x))
                .collect()
        }
        Suite::Sequences => vec![sequence_tables(max_n), sequence_properties(max_n)],
        Suite::Hermite => {
            let ops = match crate::hermite::build_operators(cfg.dim) {
                Ok(ops) => ops,
                Err(e) => {
                    return vec![Check::new(suite.name()).param("dim", cfg.dim).abort(&e)];
                }
            };
            (0..=max_n)
                .into_par_iter()
                .map(|n| verify_hermite(n, &ops, cfg.tol))
                .collect()
        }
        Suite::Oracles => (0..u64::from(cfg.cases))
            .into_par_iter()
            .map(|case| verify_realization(cfg.seed, case, max_l))
            .collect(),
    }
}

/// Runs several suites in order, concatenating their reports.
pub fn run_suites(suites: &[Suite], cfg: &SuiteConfig) -> Vec<VerificationReport> {
    suites.iter().flat_map(|&s| run_suite(s, cfg)).collect()
}

/// `pⁿ/n!`.
pub(crate) fn p_scaled(n: u32) -> WeylElement {
    WeylElement::monomial(0, n).scale_rat(&factorial_q(n).recip())
}

/// `qᵐ/m!`.
pub(crate) fn q_scaled(m: u32) -> WeylElement {
    WeylElement::monomial(m, 0).scale_rat(&factorial_q(m).recip())
}

/// `r·cᵏ`.
pub(crate) fn c_term(k: u32, r: Rational) -> CPoly {
    CPoly::monomial(k, GaussianRational::real(r))
}
