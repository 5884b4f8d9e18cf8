use lmkit_braidcat::BraidError;
use lmkit_freegroup::FreeGroupError;
use lmkit_laurent::LaurentError;
use thiserror::Error;

/// Errors raised while evaluating or combining functors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    /// A level beyond the functor's evaluation range.
    #[error("level {level} outside the evaluation range 0..={range} of {functor}")]
    OutOfRange { functor: String, level: usize, range: usize },
    /// An Artin index not in `1..n`.
    #[error("generator {letter} out of range at level {level}")]
    BadGenerator { level: usize, letter: i64 },
    /// A stabilization request with `n′ < n`.
    #[error("no stabilization from {0} to {1}")]
    BadStabilization(usize, usize),
    /// Unknown built-in name or malformed parameters.
    #[error("unknown functor {0:?}")]
    UnknownFunctor(String),
    /// A twist or parameter that must be a unit is not.
    #[error("{0} is not a unit")]
    NotUnit(String),
    /// Functors combined over incompatible levels or shapes.
    #[error("incompatible: {0}")]
    Incompatible(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
}
