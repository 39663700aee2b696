use thiserror::Error;

/// Errors raised by the algebraic operations and the suite runner.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("division by u is ill-defined: the u^0 coefficient is nonzero")]
    NonzeroConstantTerm,
    #[error("u-cap exhausted: cannot divide a series of cap 0 by u")]
    UCapExhausted,
    #[error("expected a top-degree form of rank {expected}, found rank {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("value tag mismatch: {0}")]
    ValueTagMismatch(&'static str),
    #[error("input is not normalized: {0}")]
    NotNormalized(&'static str),
    #[error("volume form mismatch")]
    VolumeMismatch,
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
