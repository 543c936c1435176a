use thiserror::Error;

/// Errors surfaced by the library. Everything except `Internal` is a caller
/// mistake and maps to a validation failure at the command line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }

    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
