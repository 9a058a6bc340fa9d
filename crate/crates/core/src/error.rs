use thiserror::Error;

/// Errors raised by the exact-arithmetic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Textual input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A parameterized system hit a zero denominator.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
