use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    Parse(String),

    #[error("row degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("polynomial has nonzero constant term {0}")]
    NonzeroConstant(String),

    #[error("coefficient row must not be empty")]
    EmptyRow,
}

pub type Result<T> = std::result::Result<T, Error>;
