use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant carries a human-readable message naming the violated
/// precondition, so callers (notably the CLI) can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input (partitions, diagrams, permutations).
    #[error("parse error: {0}")]
    Parse(String),
    /// A mathematical precondition of an operation is not met.
    #[error("domain error: {0}")]
    Domain(String),
    /// Operands have incompatible sizes.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    /// A configured degree or entry ceiling would be exceeded.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// An internal arithmetic invariant failed (e.g. a non-integral
    /// Schur coefficient); this always signals a bug.
    #[error("arithmetic invariant violated: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
