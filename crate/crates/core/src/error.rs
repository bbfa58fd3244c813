use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Two arguments were built over different alphabets.
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    /// A configured resource budget was exceeded.
    #[error("resource budget exceeded: {0}")]
    Resource(String),

    /// A parameter was outside the supported (desk-scale) range.
    #[error("parameter out of range: {0}")]
    ParamRange(String),

    /// Malformed input (text formats, ill-formed models, bad words).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// An operation was asked for a model that deliberately does not support it.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Internal invariant violation; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn mismatch(what: impl Into<String>) -> Self {
        Error::AlphabetMismatch(what.into())
    }

    pub(crate) fn resource(what: impl Into<String>) -> Self {
        Error::Resource(what.into())
    }

    pub(crate) fn invalid(what: impl Into<String>) -> Self {
        Error::Invalid(what.into())
    }
}
