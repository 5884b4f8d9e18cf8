//! Free groups `F_n`, the group ring `𝕂[F_n]` over `𝕂 = ℚ[t^{±1}, q^{±1}]`,
//! the right Fox calculus on the augmentation ideal, and the braid actions
//! `B_n → Aut(F_n)` (Artin and the seven Wada types).
//!
//! Conventions:
//!
//! * generators are 1-based: `g_1, …, g_n`;
//! * Fox derivatives are *right* derivatives: `w − 1 = Σ_i (g_i − 1)·∂_i(w)`,
//!   with `∂_i(uv) = ∂_i(u)·v + ∂_i(v)`;
//! * a map `φ ∘ ψ` applies `ψ` first.

mod action;
mod error;
mod fox;
mod map;
mod ring;
mod word;

pub use action::{artin_action, include_left, include_right, wada_action, wada_dual, wada_pair, DualKind, WadaPair};
pub use error::FreeGroupError;
pub use fox::{fox_derivatives, AugIdealElement};
pub use map::FreeGroupMap;
pub use ring::GroupRingElement;
pub use word::FreeWord;
