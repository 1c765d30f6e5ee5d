use thiserror::Error;

use crate::scalar::ScalarKind;

/// Errors raised by the algebra layer and by the witness constructions built
/// on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("scalar mismatch: {left} vs {right}")]
    ScalarMismatch { left: ScalarKind, right: ScalarKind },

    #[error("operation requires a field, got {0}")]
    UnsupportedRing(ScalarKind),

    #[error("empty matrix: dimension must be positive")]
    EmptyMatrix,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("drazin index {index} is too large for a group inverse")]
    IndexTooLarge { index: usize },

    #[error("resolvent bracket is singular: {0}")]
    SingularResolvent(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("ring with {elements} elements exceeds the enumeration budget of {budget}")]
    BudgetExceeded { elements: u128, budget: u128 },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
