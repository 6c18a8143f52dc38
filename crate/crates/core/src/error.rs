use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value is not real (not fixed by complex conjugation)")]
    NotReal,
    #[error("division by zero")]
    DivisionByZero,
    #[error("Chebyshev denominator P_{0}(delta) vanishes")]
    VanishingChebyshev(usize),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("shading mismatch: {0}")]
    ShadingMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
