use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// A Hadamard series `Σ tⁿ/n! ad_xⁿ(w)` still had a nonzero iterate after `cap` steps.
    #[error("series did not terminate within {cap} iterations")]
    NonTerminatingSeries { cap: usize },

    /// An element expected to carry an overall factor of `c` did not.
    #[error("element is not divisible by c: {0}")]
    NonDivisible(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("tolerance exceeded at n={n}, l={l}: relative error {error:.3e}")]
    ToleranceExceeded { n: u32, l: usize, error: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}
