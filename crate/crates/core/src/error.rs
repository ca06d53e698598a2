use thiserror::Error;

/// Errors raised by graph construction, parsing, counting and search.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arguments violate an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),

    /// Malformed serialized data (graph6 or JSON).
    #[error("parse error: {0}")]
    Parse(String),

    /// The request is well-formed but has no answer, e.g. no k-MIS exists.
    #[error("domain error: {0}")]
    Domain(String),

    /// A size cap (vertex bound, exhaustive-search limit) would be exceeded.
    #[error("cap exceeded: {0}")]
    Cap(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
