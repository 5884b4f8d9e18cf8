use thiserror::Error;

/// Errors raised by braid-word and bracket-category operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    /// An Artin letter outside `±1..=±(n−1)`.
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i64, strands: usize },
    /// Operands with different strand counts.
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    /// A bracket morphism whose target is smaller than its source, or whose
    /// word does not live on the target.
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    /// Morphisms that cannot be composed.
    #[error("cannot compose {0}")]
    NotComposable(String),
    /// Malformed braid-word text.
    #[error("cannot parse braid word {0:?}")]
    Parse(String),
    /// Symbolic Burau coefficients left the i128 range.
    #[error("coefficient overflow in symbolic Burau evaluation")]
    Overflow,
}
