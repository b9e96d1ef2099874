use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("undefined input: {0}")]
    UndefinedInput(String),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("input is not 2-linear: {0}")]
    NotTwoLinear(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
