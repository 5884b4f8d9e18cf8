//! Computable functors from the bracket category of the braid groupoid to
//! free modules over `𝕂 = ℚ[t^{±1}, q^{±1}]`.
//!
//! A [`BraidFunctor`] is given level by level: the dimension of `F(n)`, the
//! matrices `F(σ_i)`, the stabilizations `F([n′−n, id_{n′}])` and optional
//! retractions of them. Matrices act on column vectors from the left. A
//! general morphism evaluates as `F([n′−n, σ]) = F(σ) · F([n′−n, id])`.

mod builtins;
mod combinators;
mod criterion;
mod error;
mod functor;
mod group_ring;
mod report;

pub use builtins::Builtin;
pub use combinators::{corrupt_entry, direct_sum, scalar_twist, tensor, translation, zero};
pub use criterion::{check_functor_criterion, check_natural, same_image, NaturalMap};
pub use error::RepError;
pub use functor::{last_coordinates, BraidFunctor, FunctorDump, FunctorRules};
pub use group_ring::group_ring_matrix;
pub use report::{CheckReport, Violation};
