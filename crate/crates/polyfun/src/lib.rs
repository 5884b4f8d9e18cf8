//! Polynomiality calculus for functors on the bracket category of the braid
//! groupoid: the evanescence functor `κ₁`, the difference functor `δ₁`,
//! range-relative strong and very strong degree, and executable checks of
//! how the Long-Moody functor interacts with them.

mod degree;
mod error;
mod functors;
mod split;
mod theorems;

pub use degree::{estimate_strong_degree, DegreeEvidence, DegreeReport};
pub use error::PolyError;
pub use functors::{delta, delta_power, kappa, rank_one_isomorphism};
pub use split::{i1_map, split_matrix, Certification, Elimination, SplitStabilization};
pub use theorems::{
    check_translated_atomic, check_translation_commutation, delta_lm_isomorphism, kappa_lm_isomorphism,
    tau_delta_isomorphism, tau_kappa_isomorphism, verify_degree_theorems, verify_splitting_theorem,
    DegreeTheoremReport,
};
