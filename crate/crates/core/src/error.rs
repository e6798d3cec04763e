use alloc::string::String;

/// Errors raised by the geometric and cohomological routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone is not full-dimensional (dim {dim} in rank {rank})")]
    NotFullDimensional { dim: usize, rank: usize },
    #[error("vector is not primitive (content {0})")]
    NotPrimitive(i64),
    #[error("vector is not in the lattice")]
    NotInLattice,
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("not smooth: {0}")]
    NotSmooth(String),
    #[error("not complete: {0}")]
    NotComplete(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("propagation refused: {0}")]
    Refused(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
