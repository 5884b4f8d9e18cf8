use thiserror::Error;

/// Errors raised by free-group operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    /// Operands live in free groups of different ranks.
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    /// A generator index outside `1..=rank` (or an Artin index outside `1..n`).
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: i64, rank: usize },
    /// Unknown Wada kind.
    #[error("invalid Wada kind {0} (expected 1..=7)")]
    InvalidKind(u8),
    /// Bounded search for an automorphism inverse failed.
    #[error("inverse certificate not found")]
    InverseNotFound,
    /// A supplied inverse certificate does not compose to the identity.
    #[error("inverse certificate does not compose to the identity")]
    InvalidCertificate,
    /// Malformed word text.
    #[error("cannot parse word {0:?}")]
    Parse(String),
}
