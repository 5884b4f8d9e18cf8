//! Comparison of `t^{-1}LM₁(t𝔛)` (Artin action, pure braid family) with the
//! Burau functor at parameter `t²`.
//!
//! The construction yields, in column convention, the blocks
//! `[[0, t²], [1, 1 − t²]]`; the conventional display of the same matrices
//! is their transpose `[[0, 1], [t², 1 − t²]]`. Conjugating the displayed
//! matrices by the order-reversing permutation `r_n` gives
//! `Bur_{t²}(σ_{n−i})`, so `r_n` alone intertwines with `Bur_{t²}` only for
//! `n ≤ 2`; composing with the half twist, `D_n = Bur_{t²}(Δ_n)^{-1} · r_n`
//! intertwines on every generator because `Δ_n σ_i Δ_n^{-1} = σ_{n−i}`.

use lmkit_braidcat::half_twist;
use lmkit_laurent::{LaurentPoly, PolyMatrix};
use lmkit_repfun::{BraidFunctor, Builtin, CheckReport};

use crate::config::{lm_apply, LMConfig};
use crate::error::LmError;

/// Which matrices to conjugate by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Intertwiner {
    /// The order reversal `r_n` alone.
    Reversal,
    /// `Bur_{t²}(Δ_n)^{-1} · r_n`.
    ReversalAndHalfTwist,
}

/// The configuration `(artin, pure braid)` with pre-twist `t` and
/// post-scale `t^{-1}`.
pub fn twisted_artin_config() -> LMConfig {
    LMConfig::artin()
        .with_pre_twist(LaurentPoly::t())
        .and_then(|c| c.with_post_scale(LaurentPoly::t_pow(-1)))
        .expect("t is a unit")
}

/// `t^{-1}LM₁(t𝔛)`, defined on levels `0..=range`.
pub fn twisted_lm_constant(range: usize) -> Result<BraidFunctor, LmError> {
    lm_apply(&twisted_artin_config(), &Builtin::Constant.functor(range + 1))
}

/// The `n × n` order-reversing permutation.
pub fn reversal(n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, n, |r, c| if r + c + 1 == n { LaurentPoly::one() } else { LaurentPoly::zero() })
}

/// The intertwiner at level `n`.
pub fn intertwiner(kind: Intertwiner, n: usize) -> Result<PolyMatrix, LmError> {
    let r = reversal(n);
    Ok(match kind {
        Intertwiner::Reversal => r,
        Intertwiner::ReversalAndHalfTwist => {
            let bur = Builtin::Burau(LaurentPoly::t_pow(2)).functor(n);
            bur.braid_matrix(&half_twist(n).inverse())?.mul(&r)?
        }
    })
}

/// Checks `X_n · M(σ_i) · X_n^{-1} = Bur_{t²}(σ_i)` for `1 ≤ n ≤ N`, where
/// `M(σ_i)` is the displayed (transposed) generator matrix of
/// `t^{-1}LM₁(t𝔛)` and `X_n` the chosen intertwiner.
pub fn check_burau_equivalence(kind: Intertwiner, n_max: usize) -> Result<CheckReport, LmError> {
    let lm = twisted_lm_constant(n_max)?;
    let bur = Builtin::Burau(LaurentPoly::t_pow(2)).functor(n_max);
    let name = match kind {
        Intertwiner::Reversal => "reversal",
        Intertwiner::ReversalAndHalfTwist => "reversal and half twist",
    };
    let mut report = CheckReport::new("Burau equivalence", name, n_max, None);
    for n in 1..=n_max {
        let x = intertwiner(kind, n)?;
        let x_inv = x.inverse()?;
        for i in 1..n as i64 {
            let displayed = lm.generator(n, i)?.transpose();
            let lhs = x.mul(&displayed)?.mul(&x_inv)?;
            report.compare("conjugation", n, None, &[format!("s{i}")], &lhs, &bur.generator(n, i)?);
        }
    }
    Ok(report)
}
