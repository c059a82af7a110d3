use thiserror::Error;

/// Errors raised by the library. Every message names the violated
/// precondition.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("polynomial is reducible over the field: {0}")]
    Reducible(String),
    #[error("minimal polynomial must be monic: {0}")]
    NotMonic(String),
    #[error("degree cap exceeded: {0}")]
    CapExceeded(String),
    #[error("size budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not supported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
