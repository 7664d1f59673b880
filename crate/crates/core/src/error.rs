use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a positive root: {0}")]
    NotAPositiveRoot(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("truncation mismatch: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
