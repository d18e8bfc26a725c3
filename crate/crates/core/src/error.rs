use thiserror::Error;

/// Errors reported by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller supplied arguments outside an operation's domain.
    #[error("argument error: {0}")]
    Argument(String),
    /// A substitution or variable table refers to something that does not exist.
    #[error("configuration error: {0}")]
    Configuration(String),
    /// An identity that must hold by construction did not; this signals a bug.
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InternalConsistency(msg.into()))
}
