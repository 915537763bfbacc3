use thiserror::Error;

/// Errors surfaced by graph construction, ingestion, and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte position of the offending character.
    #[error("invalid graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph size {n} exceeds the supported limit of {limit}")]
    UnsupportedSize { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A theorem-mandated invariant failed during an analysis. Never a normal result.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
