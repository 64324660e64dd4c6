use thiserror::Error;

/// Errors raised by the library. Each variant carries a human-readable reason.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation
    /// (superluminal velocity, negative radicand, non-positive spring constant, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition on the inputs does not hold (e.g. an off-shell momentum).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A name lookup in one of the registries failed.
    #[error("unknown {kind} `{name}` (available: {available})")]
    UnknownName {
        kind: &'static str,
        name: String,
        available: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
