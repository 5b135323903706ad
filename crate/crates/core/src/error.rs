use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {label}{rank}: {constraint}")]
    InvalidType {
        label: String,
        rank: usize,
        constraint: String,
    },

    #[error("{what} exceeds the configured cap of {cap}")]
    BudgetExceeded { what: String, cap: usize },

    /// A set of negative roots is not stable under adding positive roots.
    /// Coefficient vectors of the offending triple `gamma + alpha = sum`.
    #[error("not a Hessenberg space: {gamma:?} + {alpha:?} = {sum:?} is missing from the set")]
    ClosureViolation {
        gamma: Vec<i32>,
        alpha: Vec<i32>,
        sum: Vec<i32>,
    },

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenbergFunction(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A mathematical guarantee did not hold. Always a bug or a counterexample.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}
