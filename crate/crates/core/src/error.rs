use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded: {what} limited to {limit}, got {requested}")]
    Capacity {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    /// A construction-time invariant was violated. Never expected in practice.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capacity(what: &'static str, limit: usize, requested: usize) -> Self {
        Error::Capacity {
            what,
            limit,
            requested,
        }
    }
}
