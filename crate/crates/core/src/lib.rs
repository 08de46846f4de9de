//! Exact computation in the Weyl algebra `pq − qp = c` over ℚ(i)[c], with
//! Euler/Bernoulli sequences, concrete realizations used as oracles, and
//! verification suites for commutator/anti-commutator identities.

pub mod arith;
pub mod error;
pub mod hermite;
pub mod poly;
pub mod random;
pub mod realization;
pub mod report;
pub mod sequences;
pub mod suites;
mod text;
pub mod weyl;

pub use arith::{GaussianRational, Rational};
pub use error::{Error, Result};
pub use hermite::OscillatorMatrices;
pub use poly::{CPoly, RatPoly};
pub use realization::XPoly;
pub use report::{Status, VerificationReport};
pub use suites::{run_suite, run_suites, Suite, SuiteConfig};
pub use weyl::{Algebra, Hamiltonian, WeylElement};
