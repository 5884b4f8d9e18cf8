use lmkit_braidcat::BraidError;
use lmkit_freegroup::FreeGroupError;
use lmkit_laurent::LaurentError;
use lmkit_repfun::RepError;
use thiserror::Error;

/// Errors raised by the Long-Moody construction and its verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LmError {
    /// A malformed configuration (unknown action, non-unit twist, …).
    #[error("configuration: {0}")]
    Config(String),
    /// The base functor is not defined on enough levels.
    #[error("base functor {functor} has evaluation range {range}; at least {needed} is required")]
    Range { functor: String, range: usize, needed: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}
