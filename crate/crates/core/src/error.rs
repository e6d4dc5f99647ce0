use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid set: {0}")]
    InvalidSet(String),

    #[error("matrix is not symmetric (max relative asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("linear minimization over an unbounded set")]
    UnboundedSet,

    #[error("no closed-form projection onto {0}")]
    NoClosedForm(&'static str),

    #[error("starting point is not a member of the set (violation {violation:e})")]
    NotAMember { violation: f64 },

    #[error("conditional gradient hit the cap of {iters} iterations with gap {gap:e}")]
    IterationCapReached { iters: usize, gap: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("trace length mismatch: expected {expected} points, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("trace has no iterations")]
    EmptyTrace,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
