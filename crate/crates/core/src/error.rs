use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {family}{rank}: {reason}")]
    InvalidType {
        family: String,
        rank: usize,
        reason: String,
    },

    #[error("vector {0} is not a root of the system")]
    NotARoot(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("non-integral pairing {pairing} of weight {weight} with a coroot")]
    NonIntegralPairing { weight: String, pairing: String },

    #[error("group enumeration exceeded the element cap of {cap} (group order {order})")]
    CapExceeded { cap: usize, order: u128 },

    #[error("subsystem enumeration aborted after frontier {frontier}: {reason}")]
    PartialEnumeration { frontier: usize, reason: String },

    #[error("operation requires a simply-laced (ADE) root system, got {0}")]
    NotSimplyLaced(String),

    #[error("set of roots is not completely perpendicular")]
    NotCompletelyPerpendicular,

    #[error("completely perpendicular sets must be nonempty")]
    EmptySet,

    #[error("no invariant symplectic form: {0}")]
    NoSymplecticForm(String),

    #[error("restricted trace form is degenerate (rank {rank} < {dim})")]
    DegenerateRestriction { rank: usize, dim: usize },

    #[error("all {0} sample points were degenerate")]
    DegenerateSamples(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed description: {0}")]
    Malformed(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
