use thiserror::Error;

/// Errors raised by the arithmetic layer and the evaluators built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precision lost: {0}")]
    PrecisionLoss(String),
    #[error("negative valuation {0}: value is not a p-integer")]
    NegativeValuation(i64),
    #[error("division by exact zero")]
    DivisionByExactZero,
    #[error("{0} is not a p-integer for p = {1}")]
    NotPIntegral(String, u64),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("p^N = {0}^{1} does not fit the residue width")]
    PrecisionOverflow(u64, u32),
    #[error("parameter too large for the fast path: {0}")]
    ParameterTooLarge(String),
    #[error("{0} is not representable by {1}")]
    NotRepresentable(u64, String),
    #[error("ambiguous normalization for p = {0} and {1}: {2} solutions")]
    AmbiguousNormalization(u64, String, usize),
    #[error("cannot parse form {0:?}")]
    BadForm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
