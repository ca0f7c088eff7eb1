use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("{0:?} is not a positive root")]
    NotARoot(Vec<u32>),
    #[error("vertex {0} is not a sink")]
    NotASink(usize),
    #[error("vertex {0} is not a source")]
    NotASource(usize),
    #[error("representation has a simple summand at vertex {0}")]
    SimpleSummand(usize),
    #[error("no almost split sequence ends at a projective")]
    Projective,
    #[error("knitting inconsistency: {0}")]
    Knitting(String),
    #[error("slope comparison degenerate")]
    DegenerateSlope,
    #[error("zero dimension vector")]
    ZeroVector,
    #[error("system is feasible")]
    Feasible,
    #[error("empty system")]
    EmptySystem,
    #[error("oracle bound exceeded: total dimension {dim} > {bound}")]
    OracleBound { dim: u32, bound: u32 },
    #[error("denominator divisible by {0}")]
    BadPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
