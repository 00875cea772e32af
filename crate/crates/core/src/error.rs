use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain (square discriminant,
    /// zero right-hand side, even Jacobi modulus, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured resource guard would be exceeded.
    #[error("resource guard exceeded: {0}")]
    Resource(String),

    /// An identity that must hold by construction failed. Seeing this means
    /// either a bug or a counterexample to a claimed identity.
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
