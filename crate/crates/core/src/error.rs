use thiserror::Error;

/// Errors produced by the transform library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwtError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("size cap exceeded: {rows} rows requested, cap is {cap}")]
    SizeCap { rows: u128, cap: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error in {what} {input:?} at {position}: {message}")]
    Parse {
        what: &'static str,
        input: String,
        position: String,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, SwtError>;
