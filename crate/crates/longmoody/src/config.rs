//! Long-Moody configurations and the functor `LM_{a,ς}`.
//!
//! `LM(F)(n) = ℐ_{𝕂[F_n]} ⊗_{𝕂[F_n]} F(n+1)` is free on the blocks
//! `(g_j − 1) ⊗ F(n+1)`, `j = 1..n`. For `σ ∈ B_n` the block `(i, j)` of
//! `LM(F)(σ)` is `(F∘ς_n)(∂_i(a_n(σ)(g_j))) · F(id_1 ♮ σ)`, with `∂_i` the
//! right Fox derivatives (`w − 1 = Σ (g_i − 1)∂_i(w)`). The stabilization
//! `[n′−n, id]` sends block `j` to block `j + n′ − n` through
//! `F(id_1 ♮ [n′−n, id]) = F(b_{1,n′−n}^{-1} ♮ id_n) · F.stab(1+n, 1+n′)`.

use lmkit_braidcat::SigmaFamily;
use lmkit_freegroup::fox_derivatives;
use lmkit_laurent::{LaurentPoly, PolyMatrix};
use lmkit_repfun::{group_ring_matrix, scalar_twist, translation, BraidFunctor, FunctorRules, RepError};

use crate::action::ActionFamily;
use crate::error::LmError;

/// The parameters of a Long-Moody functor.
#[derive(Clone, Debug)]
pub struct LMConfig {
    /// The braid actions `a_n`.
    pub action: ActionFamily,
    /// The family `ς_n: F_n → B_{n+1}`.
    pub sigma: SigmaFamily,
    /// Apply the construction to `yF` instead of `F`.
    pub pre_twist: Option<LaurentPoly>,
    /// Multiply every generator matrix of the result by this unit.
    pub post_scale: Option<LaurentPoly>,
}

fn require_unit(y: &LaurentPoly) -> Result<(), LmError> {
    if y.is_unit() {
        Ok(())
    } else {
        Err(LmError::Config(format!("twist {y} is not a unit")))
    }
}

impl LMConfig {
    /// An untwisted configuration.
    pub fn new(action: ActionFamily, sigma: SigmaFamily) -> Self {
        Self { action, sigma, pre_twist: None, post_scale: None }
    }

    /// The Artin action with the pure braid family.
    pub fn artin() -> Self {
        Self::new(ActionFamily::Artin, SigmaFamily::pure_braid())
    }

    /// A Wada-type action of the given kind with the trivial family.
    pub fn wada(kind: u8) -> Self {
        Self::new(ActionFamily::Wada { kind, m: 1 }, SigmaFamily::trivial())
    }

    /// Sets the pre-twist `y` (a unit).
    pub fn with_pre_twist(mut self, y: LaurentPoly) -> Result<Self, LmError> {
        require_unit(&y)?;
        self.pre_twist = Some(y);
        Ok(self)
    }

    /// Sets the post-scale (a unit).
    pub fn with_post_scale(mut self, y: LaurentPoly) -> Result<Self, LmError> {
        require_unit(&y)?;
        self.post_scale = Some(y);
        Ok(self)
    }

    /// `action,sigma[,pre[,post]]`, the parameter list used in functor
    /// expressions (`1` stands for an absent twist).
    pub fn name(&self) -> String {
        let mut parts = vec![self.action.name(), self.sigma.name().to_string()];
        if self.pre_twist.is_some() || self.post_scale.is_some() {
            let show = |y: &Option<LaurentPoly>| y.as_ref().map_or("1".to_string(), |y| y.to_string());
            parts.push(show(&self.pre_twist));
            parts.push(show(&self.post_scale));
        }
        parts.join(",")
    }

    /// The functor the construction is applied to: `F`, or `yF` under a
    /// pre-twist.
    pub fn base(&self, f: &BraidFunctor) -> Result<BraidFunctor, LmError> {
        match &self.pre_twist {
            Some(y) => Ok(scalar_twist(y, f)?),
            None => Ok(f.clone()),
        }
    }
}

struct LmRules {
    name: String,
    cfg: LMConfig,
    base: BraidFunctor,
    tau1: BraidFunctor,
    post: Option<(LaurentPoly, LaurentPoly)>,
}

impl LmRules {
    fn block_dim(&self, n: usize) -> usize {
        self.base.dim(n + 1).unwrap_or(0)
    }

    /// Unscaled `LM(F)(σ_i^{±1})` at level `n`.
    fn blocks(&self, n: usize, letter: i64) -> Result<PolyMatrix, RepError> {
        let a = self.cfg.action.generator(n, letter).map_err(to_rep)?;
        let tf = self.tau1.generator(n, letter)?;
        let d = self.block_dim(n);
        let mut out = PolyMatrix::zeros(n * d, n * d);
        for j in 1..=n {
            let fox = fox_derivatives(a.image(j));
            for (r, c) in fox.coords().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let m = group_ring_matrix(&self.base, n, &self.cfg.sigma, c)?.mul(&tf)?;
                out.set_block(r * d, (j - 1) * d, &m);
            }
        }
        Ok(out)
    }
}

fn to_rep(e: LmError) -> RepError {
    match e {
        LmError::Rep(r) => r,
        LmError::FreeGroup(f) => RepError::FreeGroup(f),
        LmError::Braid(b) => RepError::Braid(b),
        LmError::Laurent(l) => RepError::Laurent(l),
        other => RepError::Incompatible(other.to_string()),
    }
}

impl FunctorRules for LmRules {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn eval_range(&self) -> usize {
        self.base.eval_range() - 1
    }

    fn dim(&self, n: usize) -> usize {
        n * self.block_dim(n)
    }

    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError> {
        let m = self.blocks(n, i as i64)?;
        Ok(match &self.post {
            Some((y, _)) => m.scale(y),
            None => m,
        })
    }

    fn inverse_generator(&self, n: usize, i: usize) -> Option<Result<PolyMatrix, RepError>> {
        Some(self.blocks(n, -(i as i64)).map(|m| match &self.post {
            Some((_, y_inv)) => m.scale(y_inv),
            None => m,
        }))
    }

    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        let s = self.tau1.stab(n, n_prime)?;
        let (d, d1) = (self.block_dim(n), self.block_dim(n_prime));
        let mut out = PolyMatrix::zeros(n_prime * d1, n * d);
        for j in 0..n {
            out.set_block((j + n_prime - n) * d1, j * d, &s);
        }
        Ok(out)
    }

    fn split(&self, n: usize, n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        let r = self.tau1.split(n, n_prime)?;
        Some(r.map(|r| {
            let (d, d1) = (self.block_dim(n), self.block_dim(n_prime));
            let mut out = PolyMatrix::zeros(n * d, n_prime * d1);
            for j in 0..n {
                out.set_block(j * d, (j + n_prime - n) * d1, &r);
            }
            out
        }))
    }
}

/// The Long-Moody functor `LM_{a,ς}(F)`, defined on levels
/// `0..=F.eval_range() − 1`.
pub fn lm_apply(cfg: &LMConfig, f: &BraidFunctor) -> Result<BraidFunctor, LmError> {
    if f.eval_range() < 2 {
        return Err(LmError::Range { functor: f.name(), range: f.eval_range(), needed: 2 });
    }
    let base = cfg.base(f)?;
    let post = match &cfg.post_scale {
        Some(y) => Some((y.clone(), y.inverse()?)),
        None => None,
    };
    Ok(BraidFunctor::new(LmRules {
        name: format!("lm({}; {})", cfg.name(), f.name()),
        cfg: cfg.clone(),
        tau1: translation(1, &base),
        base,
        post,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lmkit_repfun::{check_functor_criterion, Builtin};

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn dimension_multiplies_by_n() {
        let lm = lm_apply(&LMConfig::artin(), &Builtin::Burau(LaurentPoly::t()).functor(5)).unwrap();
        assert_eq!(lm.eval_range(), 4);
        assert_eq!((0..=4).map(|n| lm.dim(n).unwrap()).collect::<Vec<_>>(), vec![0, 2, 6, 12, 20]);
    }

    #[test]
    fn requires_two_levels() {
        assert!(matches!(
            lm_apply(&LMConfig::artin(), &Builtin::Constant.functor(1)),
            Err(LmError::Range { needed: 2, .. })
        ));
    }

    #[test]
    fn twists_must_be_units() {
        assert!(LMConfig::artin().with_pre_twist(lp("1 + t")).is_err());
        assert!(LMConfig::artin().with_post_scale(lp("2*t")).is_ok());
    }

    #[test]
    fn twisted_constant_block() {
        let cfg = LMConfig::artin().with_pre_twist(LaurentPoly::t()).unwrap().with_post_scale(lp("t^-1")).unwrap();
        assert_eq!(cfg.name(), "artin,pure-braid,t,t^-1");
        let lm = lm_apply(&cfg, &Builtin::Constant.functor(4)).unwrap();
        let m = lm.generator(2, 1).unwrap();
        let expected = PolyMatrix::from_rows(vec![vec![lp("0"), lp("t^2")], vec![lp("1"), lp("1 - t^2")]], 2).unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn stab_matches_translated_stab_blockwise() {
        let f = Builtin::Burau(LaurentPoly::t()).functor(5);
        let lm = lm_apply(&LMConfig::artin(), &f).unwrap();
        let s = lm.stab(1, 3).unwrap();
        let tau = translation(1, &f).stab(1, 3).unwrap();
        assert_eq!(s.rows(), 3 * 4);
        assert_eq!(s.block(2 * 4, 0, 4, 2), tau);
        assert!(s.block(0, 0, 8, 2).is_zero());
        let r = lm.split(1, 3).unwrap().unwrap();
        assert!(r.mul(&s).unwrap().is_identity());
    }

    #[test]
    fn lm_of_burau_is_a_functor() {
        let lm = lm_apply(&LMConfig::artin(), &Builtin::Burau(LaurentPoly::t()).functor(4)).unwrap();
        let r = check_functor_criterion(&lm, 3, 2).unwrap();
        assert!(r.passed(), "{r}");
    }
}
