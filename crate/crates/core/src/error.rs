use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("sequence length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("series is not invertible: constant term must be a nonzero rational")]
    NotInvertible,
    #[error("need {needed} moments, only {available} available")]
    InsufficientMoments { needed: usize, available: usize },
    #[error("recurrence coefficient {which}_{index} is not available (table depth {depth})")]
    DepthExceeded {
        which: char,
        index: usize,
        depth: usize,
    },
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("Hankel determinant vanishes at depth {depth}")]
    DegenerateHankel { depth: usize },
    #[error("power {power} exceeds matrix size {size}")]
    PowerExceedsSize { power: usize, size: usize },
    #[error("no closed form for row {0} (rows 1..=5 only)")]
    UnknownRow(usize),
    #[error("recurrence coefficient depends on x: {0}")]
    XDependence(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("quadrature failed: {0}")]
    Quadrature(String),
}

pub type Result<T> = std::result::Result<T, Error>;
