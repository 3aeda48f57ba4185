use thiserror::Error;

use crate::rootsys::Series;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not admissible for series {series}")]
    InvalidRank { series: Series, rank: usize },

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("level {0} is critical")]
    CriticalLevel(String),

    #[error("orbit exceeded the cap of {cap} elements")]
    OrbitCapExceeded { cap: usize },

    #[error("operation requires type {expected}, got {found}")]
    WrongType { expected: &'static str, found: String },

    #[error("weight {0} is not bounded")]
    NotBounded(String),

    #[error("weight has {found} labels, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("no highest weights given")]
    EmptyInput,

    #[error("highest weight {0} appears more than once")]
    DuplicateWeight(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("cannot parse rational `{0}`")]
    ParseRational(String),

    #[error("malformed report: {0}")]
    MalformedReport(String),
}
