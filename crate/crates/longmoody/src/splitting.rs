//! The morphisms splitting the translated Long-Moody functor,
//! `τ₁ LM(F) ≅ τ₂F ⊕ LM(τ₁F)`, and the matrix-level identities around them:
//! the key lemma `ξ′ ∘ LM(i₁) = i₁LM`, naturality of `[υ | ξ′]`, additivity,
//! and the Kronecker factorization for the trivial family `ς`.

use lmkit_braidcat::SigmaFamily;
use lmkit_laurent::{LaurentPoly, PolyMatrix};
use lmkit_repfun::{check_natural, direct_sum, translation, BraidFunctor, Builtin, CheckReport, NaturalMap};

use crate::action::ActionFamily;
use crate::config::{lm_apply, LMConfig};
use crate::error::LmError;

/// `υ_n: τ₂F(n) → τ₁LM(F)(n)` and `ξ′_n: LM(τ₁F)(n) → τ₁LM(F)(n)` in the
/// block bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingMaps {
    /// `v ↦ (g_1 − 1) ⊗ v`: the identity into block 1.
    pub upsilon: PolyMatrix,
    /// `(g_j − 1) ⊗ v ↦ (g_{1+j} − 1) ⊗ F(b_{1,1}^{-1} ♮ id_n)(v)`.
    pub xi: PolyMatrix,
}

impl SplittingMaps {
    /// The square matrix `[υ_n | ξ′_n]`.
    pub fn combined(&self) -> Result<PolyMatrix, LmError> {
        Ok(self.upsilon.hstack(&self.xi)?)
    }
}

/// Which `ξ′` to build: the correct one, or (as a negative control) the
/// block shift without the factor `F(b_{1,1}^{-1} ♮ id_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiVariant {
    Correct,
    WithoutBraiding,
}

fn need(f: &BraidFunctor, level: usize) -> Result<(), LmError> {
    if f.eval_range() < level {
        return Err(LmError::Range { functor: f.name(), range: f.eval_range(), needed: level });
    }
    Ok(())
}

fn xi_matrix(base: &BraidFunctor, n: usize, variant: XiVariant) -> Result<PolyMatrix, LmError> {
    let d = base.dim(n + 2)?;
    let b = match variant {
        XiVariant::Correct => base.generator(n + 2, -1)?,
        XiVariant::WithoutBraiding => PolyMatrix::identity(d),
    };
    let mut xi = PolyMatrix::zeros((n + 1) * d, n * d);
    for j in 0..n {
        xi.set_block((j + 1) * d, j * d, &b);
    }
    Ok(xi)
}

/// `υ_n` and `ξ′_n` for `LM_{cfg}(F)`; requires `n + 2 ≤ F.eval_range()`.
pub fn splitting_maps(cfg: &LMConfig, f: &BraidFunctor, n: usize) -> Result<SplittingMaps, LmError> {
    need(f, n + 2)?;
    let base = cfg.base(f)?;
    let d = base.dim(n + 2)?;
    let mut upsilon = PolyMatrix::zeros((n + 1) * d, d);
    upsilon.set_block(0, 0, &PolyMatrix::identity(d));
    Ok(SplittingMaps { upsilon, xi: xi_matrix(&base, n, XiVariant::Correct)? })
}

/// `[υ | ξ′]` as a candidate natural map `τ₂F ⊕ LM(τ₁F) → τ₁LM(F)`.
pub fn splitting_natural_map(cfg: &LMConfig, f: &BraidFunctor) -> Result<NaturalMap, LmError> {
    let source = direct_sum(&translation(2, &cfg.base(f)?), &lm_apply(cfg, &translation(1, f))?);
    let target = translation(1, &lm_apply(cfg, f)?);
    let (cfg, f) = (cfg.clone(), f.clone());
    Ok(NaturalMap::new("[υ | ξ′]", &source, &target, move |n| {
        splitting_maps(&cfg, &f, n).and_then(|s| s.combined()).map_err(|e| match e {
            LmError::Rep(r) => r,
            other => lmkit_repfun::RepError::Incompatible(other.to_string()),
        })
    }))
}

/// For `n ≤ N`: `[υ_n | ξ′_n]` is square with unit determinant, and it
/// intertwines every generator and stabilization of `τ₂F ⊕ LM(τ₁F)` with
/// those of `τ₁LM(F)`.
pub fn check_splitting(cfg: &LMConfig, f: &BraidFunctor, n_max: usize) -> Result<CheckReport, LmError> {
    need(f, n_max + 2)?;
    let eta = splitting_natural_map(cfg, f)?;
    let mut report =
        CheckReport::new("translation splitting", &format!("lm({}; {})", cfg.name(), f.name()), n_max, None);
    for n in 0..=n_max {
        let m = splitting_maps(cfg, f, n)?.combined()?;
        let ok = m.is_square() && m.det()?.is_unit();
        report.require(ok, "unit determinant", n, None, &[]);
    }
    report.absorb(check_natural(&eta, n_max)?);
    Ok(report)
}

/// The key lemma: `ξ′_n · LM(i₁F)_n = LM(F).stab(n, n+1)` for `n ≤ N`, where
/// `LM(i₁F)_n` applies `F.stab(n+1, n+2)` blockwise.
pub fn check_xi_lemma(cfg: &LMConfig, f: &BraidFunctor, n_max: usize) -> Result<CheckReport, LmError> {
    check_xi_lemma_variant(cfg, f, n_max, XiVariant::Correct)
}

/// [`check_xi_lemma`] with a chosen `ξ′` (for negative controls).
pub fn check_xi_lemma_variant(
    cfg: &LMConfig,
    f: &BraidFunctor,
    n_max: usize,
    variant: XiVariant,
) -> Result<CheckReport, LmError> {
    need(f, n_max + 2)?;
    let base = cfg.base(f)?;
    let lm = lm_apply(cfg, f)?;
    let mut report = CheckReport::new("xi lemma", &lm.name(), n_max, None);
    for n in 0..=n_max {
        let s = base.stab(n + 1, n + 2)?;
        let li = PolyMatrix::block_diagonal(&vec![s; n]);
        let lhs = xi_matrix(&base, n, variant)?.mul(&li)?;
        report.compare("ξ′∘LM(i₁) = i₁LM", n, Some(n + 1), &[], &lhs, &lm.stab(n, n + 1)?);
    }
    Ok(report)
}

/// With the trivial family `ς`, `LM(F)(φ) = LM(𝔛)(φ) ⊗ τ₁F(φ)` (Kronecker
/// product, blocks of `LM(F)` equal to scalar entries of `LM(𝔛)` times
/// `τ₁F` matrices) for every signed generator and stabilization, `n ≤ N`.
pub fn trivial_sigma_factorization(
    action: &ActionFamily,
    f: &BraidFunctor,
    n_max: usize,
) -> Result<CheckReport, LmError> {
    need(f, n_max + 1)?;
    let cfg = LMConfig::new(action.clone(), SigmaFamily::trivial());
    let lm_f = lm_apply(&cfg, f)?;
    let lm_x = lm_apply(&cfg, &Builtin::Constant.functor(f.eval_range()))?;
    let t1 = translation(1, f);
    let mut report = CheckReport::new("trivial-ς factorization", &lm_f.name(), n_max, None);
    for n in 0..=n_max {
        for i in 1..n as i64 {
            for l in [i, -i] {
                let rhs = lm_x.generator(n, l)?.kronecker(&t1.generator(n, l)?);
                report.compare("generator", n, None, &[format!("s{l}")], &lm_f.generator(n, l)?, &rhs);
            }
        }
        for n1 in n + 1..=n_max {
            let rhs = lm_x.stab(n, n1)?.kronecker(&t1.stab(n, n1)?);
            report.compare("stabilization", n, Some(n1), &[], &lm_f.stab(n, n1)?, &rhs);
        }
    }
    Ok(report)
}

/// The basis reordering `LM(F ⊕ G)(n) → LM(F)(n) ⊕ LM(G)(n)`.
fn additivity_permutation(n: usize, df: usize, dg: usize) -> PolyMatrix {
    let size = n * (df + dg);
    let mut p = PolyMatrix::zeros(size, size);
    for j in 0..n {
        for k in 0..df + dg {
            let target = if k < df { j * df + k } else { n * df + j * dg + (k - df) };
            p.set(target, j * (df + dg) + k, LaurentPoly::one());
        }
    }
    p
}

/// `LM(F ⊕ G) = LM(F) ⊕ LM(G)` after reordering blocks, exactly, on every
/// signed generator and stabilization for `n ≤ N`.
pub fn check_additivity(
    cfg: &LMConfig,
    f: &BraidFunctor,
    g: &BraidFunctor,
    n_max: usize,
) -> Result<CheckReport, LmError> {
    need(f, n_max + 1)?;
    need(g, n_max + 1)?;
    let lm_sum = lm_apply(cfg, &direct_sum(f, g))?;
    let (lm_f, lm_g) = (lm_apply(cfg, f)?, lm_apply(cfg, g)?);
    let mut report = CheckReport::new("additivity", &lm_sum.name(), n_max, None);
    let perm =
        |n: usize| -> Result<PolyMatrix, LmError> { Ok(additivity_permutation(n, f.dim(n + 1)?, g.dim(n + 1)?)) };
    for n in 0..=n_max {
        let p = perm(n)?;
        for i in 1..n as i64 {
            for l in [i, -i] {
                let lhs = p.mul(&lm_sum.generator(n, l)?)?.mul(&p.transpose())?;
                let rhs = lm_f.generator(n, l)?.direct_sum(&lm_g.generator(n, l)?);
                report.compare("generator", n, None, &[format!("s{l}")], &lhs, &rhs);
            }
        }
        for n1 in n + 1..=n_max {
            let lhs = perm(n1)?.mul(&lm_sum.stab(n, n1)?)?.mul(&p.transpose())?;
            let rhs = lm_f.stab(n, n1)?.direct_sum(&lm_g.stab(n, n1)?);
            report.compare("stabilization", n, Some(n1), &[], &lhs, &rhs);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_functor_gives_a_permutation() {
        let x = Builtin::Constant.functor(6);
        for n in 0..=3 {
            let m = splitting_maps(&LMConfig::artin(), &x, n).unwrap().combined().unwrap();
            assert_eq!(m.rows(), n + 1);
            assert!(m.is_square());
            assert_eq!(m.nonzero_count(), n + 1);
            assert!(m.mul(&m.transpose()).unwrap().is_identity());
        }
    }

    #[test]
    fn upsilon_hits_block_one() {
        let bur = Builtin::Burau(LaurentPoly::t()).functor(6);
        let s = splitting_maps(&LMConfig::artin(), &bur, 2).unwrap();
        assert_eq!((s.upsilon.rows(), s.upsilon.cols()), (12, 4));
        assert!(s.upsilon.block(0, 0, 4, 4).is_identity());
        assert!(s.upsilon.block(4, 0, 8, 4).is_zero());
        assert_eq!((s.xi.rows(), s.xi.cols()), (12, 8));
    }

    #[test]
    fn range_is_checked() {
        let bur = Builtin::Burau(LaurentPoly::t()).functor(3);
        assert!(matches!(splitting_maps(&LMConfig::artin(), &bur, 2), Err(LmError::Range { needed: 4, .. })));
    }

    #[test]
    fn permutation_is_orthogonal() {
        let p = additivity_permutation(3, 2, 1);
        assert!(p.mul(&p.transpose()).unwrap().is_identity());
    }
}
