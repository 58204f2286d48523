use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input violates a hypothesis of the requested computation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Ramification data fails the dimension-zero condition.
    #[error("off-shell: {0}")]
    OffShell(String),

    /// An exactness or cross-check invariant failed. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn off_shell(msg: impl Into<String>) -> Self {
        Error::OffShell(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
