use lmkit_braidcat::BraidError;
use lmkit_laurent::LaurentError;
use lmkit_longmoody::LmError;
use lmkit_polyfun::PolyError;
use lmkit_repfun::RepError;
use thiserror::Error;

/// Usage and configuration errors (exit code 2).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Lm(#[from] LmError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
