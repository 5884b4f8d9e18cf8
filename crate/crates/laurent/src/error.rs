use thiserror::Error;

/// Errors raised by Laurent polynomial and matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    /// A non-unit was inverted or raised to a negative power.
    #[error("not invertible")]
    NotInvertible,
    /// Operand shapes do not fit the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// The text form could not be parsed.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// An evaluation point had a zero coordinate.
    #[error("evaluation point coordinates must be nonzero")]
    ZeroCoordinate,
}
