use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("composition error at position {position}: {message}")]
    Composition { position: usize, message: String },
    #[error("arity error: expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("simplex has no pivot level (diagonality 0)")]
    NoPivot,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("incomplete input: {0}")]
    Incomplete(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
