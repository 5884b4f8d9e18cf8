//! The Long-Moody functor `LM_{a,ς}` on computable braid functors, the
//! coherence and reliability conditions on the pair `(a, ς)`, and the
//! explicit morphisms splitting `τ₁ ∘ LM`.
//!
//! Matrices act on column vectors from the left; `LM(F)(n)` is ordered as
//! `n` consecutive blocks `(g_j − 1) ⊗ F(n+1)`.

mod action;
mod coherence;
mod config;
mod equivalence;
mod error;
mod splitting;

pub use action::ActionFamily;
pub use coherence::{
    check_coherence, check_reliability, CoherenceReport, ConditionReport, ConditionWitness, RangeInfo, Verdict,
    CERTAINTY,
};
pub use config::{lm_apply, LMConfig};
pub use equivalence::{
    check_burau_equivalence, intertwiner, reversal, twisted_artin_config, twisted_lm_constant, Intertwiner,
};
pub use error::LmError;
pub use splitting::{
    check_additivity, check_splitting, check_xi_lemma, check_xi_lemma_variant, splitting_maps, splitting_natural_map,
    trivial_sigma_factorization, SplittingMaps, XiVariant,
};
