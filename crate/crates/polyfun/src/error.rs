use lmkit_laurent::LaurentError;
use lmkit_longmoody::LmError;
use lmkit_repfun::RepError;
use thiserror::Error;

/// Errors raised by the polynomiality calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// No certified split form of `i₁` at this level: the unit-pivot
    /// elimination left a nonzero remainder without unit entries.
    #[error("i1 of {functor} at level {level} is uncertified")]
    Uncertified { functor: String, level: usize },
    /// The functor is not defined on enough levels.
    #[error("{functor} is defined up to level {range}, level {needed} is needed")]
    Range { functor: String, range: usize, needed: usize },
    /// A rank-one comparison that needs a unit stabilization found none.
    #[error("no rank-one isomorphism: {0}")]
    NoIsomorphism(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Lm(#[from] LmError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

impl From<PolyError> for RepError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Rep(r) => r,
            PolyError::Laurent(l) => RepError::Laurent(l),
            other => RepError::Incompatible(other.to_string()),
        }
    }
}

pub(crate) fn need(f: &lmkit_repfun::BraidFunctor, level: usize) -> Result<(), PolyError> {
    if f.eval_range() < level {
        return Err(PolyError::Range { functor: f.name(), range: f.eval_range(), needed: level });
    }
    Ok(())
}
