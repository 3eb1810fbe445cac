//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("duplicate subsystem {0}")]
    DuplicateSubsystem(String),

    #[error("unknown subsystem {0}")]
    UnknownSubsystem(String),

    #[error("new order is not a permutation of the registry")]
    NotAPermutation,

    #[error("partial trace must keep at least one subsystem")]
    EmptyKeep,

    #[error("schmidt cut must be a nonempty proper subset of the registry")]
    TrivialCut,

    #[error("matrix is not unitary (defect {0:.3e})")]
    NotUnitary(f64),

    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("matrix is not hermitian (defect {0:.3e})")]
    NotHermitian(f64),

    #[error("trace is not one (trace {0})")]
    TraceNotOne(f64),

    #[error("invalid probabilities: {0}")]
    InvalidProbabilities(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("invalid commit bit {0} (must be 0 or 1)")]
    InvalidBit(u8),

    #[error("operation not allowed in phase {phase}: {action}")]
    WrongPhase { phase: String, action: String },

    #[error("malformed announcement: {0}")]
    MalformedAnnouncement(String),

    #[error("dimension must be positive")]
    ZeroDimension,

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
