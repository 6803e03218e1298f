use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,

    #[error("invalid character {ch:?} at position {pos}")]
    InvalidChar { ch: char, pos: usize },

    #[error("decimation index {k} is not coprime to period {n}")]
    NotCoprime { k: usize, n: usize },

    #[error("constant sequence has no run decomposition")]
    DegenerateRun,

    #[error("period mismatch: expected {expected}, found {found}")]
    PeriodMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search refused: {reason} (estimated nodes: {estimate})")]
    LimitExceeded { reason: String, estimate: String },

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
