//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the transforms and their preconditions.
#[derive(Debug, Error)]
pub enum Error {
    /// Two operands live on different grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// An argument violates a documented precondition.
    #[error("validation: {0}")]
    Validation(String),

    /// An iterative routine failed to reach its accuracy contract.
    #[error("numerical: {0}")]
    Numerical(String),

    /// File or serialization problem (CLI paths).
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
