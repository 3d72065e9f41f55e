use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: shapes, fillings, patterns, or argument combinations.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A configured resource cap would be exceeded.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    /// The requested computation is not defined for these arguments.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}
