use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown candidate {0}")]
    UnknownCandidate(String),
    #[error("invalid alpha: {0}")]
    InvalidAlpha(String),
    #[error("invalid election: {0}")]
    InvalidElection(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("empty candidate set")]
    EmptyCandidates,
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
