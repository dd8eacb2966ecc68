use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("root {0} is not a positive root of the system")]
    RootNotInSystem(String),
    #[error("parameter mismatch: {0}")]
    ParamsMismatch(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("element has mixed parity")]
    MixedParity,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("wrong Steinberg parameter N: expected {expected}, got {got}")]
    WrongSteinbergParameter { expected: String, got: String },
    #[error("module relation failed: {0}")]
    RelationFailure(String),
    #[error("module is not quasisimple: {0}")]
    NotQuasisimple(String),
    #[error("subspace is not stable: {0}")]
    Unstable(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
