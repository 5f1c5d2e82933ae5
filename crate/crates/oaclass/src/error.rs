//! Error type shared by all modules.

use thiserror::Error;

/// Library-wide error type.
///
/// `Budget` is deliberately distinct from `Domain`: exceeding a resource
/// budget is never a silent truncation and maps to its own CLI exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input or a violated precondition.
    #[error("{0}")]
    Domain(String),

    /// A configurable resource budget was exhausted before completion.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// I/O or parse failure.
    #[error("{0}")]
    Io(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }
    pub fn io(msg: impl Into<String>) -> Self {
        Error::Io(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
