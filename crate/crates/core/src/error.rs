use thiserror::Error;

/// Errors raised by series arithmetic, special functions and the registry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("division is not exact: {0}")]
    NonDivisible(String),
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("q -> 1/q is undefined on a truncated series")]
    TruncatedInput,
    #[error("an exact series is required here")]
    ExactRequired,
    #[error("negative Pochhammer length {0}")]
    NegativeLength(i64),
    #[error("exponents are unbounded below: {0}")]
    UnboundedBelow(String),
    #[error("product contains the zero factor (1 - q^0)")]
    ZeroFactor,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, QError>;
