use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller supplied an argument outside the operation's domain.
    #[error("usage error: {0}")]
    Usage(String),
    /// A numerical invariant (normalization, probability sum) was breached.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
