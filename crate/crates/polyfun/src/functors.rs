//! The evanescence functor `κ₁F = ker(i₁F)` and the difference functor
//! `δ₁F = coker(i₁F)`, built from certified split forms of `i₁F` at every
//! level of their range.
//!
//! With a kernel basis `K_n` (left inverse `L_n`) and a cokernel projection
//! `π_n` with complement `C_n`:
//! `κ₁F(φ) = L_{n′} · F(φ) · K_n` and `δ₁F(φ) = π_{n′} · τ₁F(φ) · C_n`.
//! Both are well defined because `i₁` is natural: `F(φ)` preserves kernels
//! and `τ₁F(φ)` preserves images.

use std::sync::Arc;

use lmkit_laurent::PolyMatrix;
use lmkit_repfun::{translation, BraidFunctor, FunctorRules, NaturalMap, RepError};

use crate::error::{need, PolyError};
use crate::split::{i1_map, SplitStabilization};

fn certified_levels(f: &BraidFunctor, n_max: usize) -> Result<Vec<Arc<SplitStabilization>>, PolyError> {
    need(f, n_max + 1)?;
    (0..=n_max)
        .map(|n| {
            let s = i1_map(f, n)?;
            s.certified()?;
            Ok(Arc::new(s))
        })
        .collect()
}

struct KappaRules {
    inner: BraidFunctor,
    levels: Vec<Arc<SplitStabilization>>,
}

impl KappaRules {
    fn restrict(&self, n: usize, n_prime: usize, m: &PolyMatrix) -> Result<PolyMatrix, RepError> {
        Ok(self.levels[n_prime].kernel_coords.mul(m)?.mul(&self.levels[n].kernel)?)
    }
}

impl FunctorRules for KappaRules {
    fn name(&self) -> String {
        format!("kappa({})", self.inner.name())
    }

    fn eval_range(&self) -> usize {
        self.levels.len() - 1
    }

    fn dim(&self, n: usize) -> usize {
        self.levels[n].kernel_dim()
    }

    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError> {
        self.restrict(n, n, &self.inner.generator(n, i as i64)?)
    }

    fn inverse_generator(&self, n: usize, i: usize) -> Option<Result<PolyMatrix, RepError>> {
        Some(self.inner.generator(n, -(i as i64)).and_then(|m| self.restrict(n, n, &m)))
    }

    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        self.restrict(n, n_prime, &self.inner.stab(n, n_prime)?)
    }
}

struct DeltaRules {
    inner: BraidFunctor,
    tau1: BraidFunctor,
    levels: Vec<Arc<SplitStabilization>>,
}

impl DeltaRules {
    fn induce(&self, n: usize, n_prime: usize, m: &PolyMatrix) -> Result<PolyMatrix, RepError> {
        Ok(self.levels[n_prime].projection.mul(m)?.mul(&self.levels[n].complement)?)
    }
}

impl FunctorRules for DeltaRules {
    fn name(&self) -> String {
        format!("delta({})", self.inner.name())
    }

    fn eval_range(&self) -> usize {
        self.levels.len() - 1
    }

    fn dim(&self, n: usize) -> usize {
        self.levels[n].cokernel_dim()
    }

    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError> {
        self.induce(n, n, &self.tau1.generator(n, i as i64)?)
    }

    fn inverse_generator(&self, n: usize, i: usize) -> Option<Result<PolyMatrix, RepError>> {
        Some(self.tau1.generator(n, -(i as i64)).and_then(|m| self.induce(n, n, &m)))
    }

    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        self.induce(n, n_prime, &self.tau1.stab(n, n_prime)?)
    }

    /// The retraction induced by a declared retraction of `τ₁F`, kept only
    /// when it really splits the induced stabilization.
    fn split(&self, n: usize, n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        let r = match self.tau1.split(n, n_prime)? {
            Ok(r) => r,
            Err(e) => return Some(Err(e)),
        };
        let induced = self.levels[n].projection.mul(&r).and_then(|m| m.mul(&self.levels[n_prime].complement));
        let stab = self.stab(n, n_prime);
        match (induced, stab) {
            (Ok(r), Ok(s)) => match r.mul(&s) {
                Ok(p) if p.is_identity() => Some(Ok(r)),
                _ => None,
            },
            (Err(e), _) => Some(Err(e.into())),
            (_, Err(e)) => Some(Err(e)),
        }
    }
}

/// `κ₁F` on levels `0..=N`; requires `N + 1 ≤ F.eval_range()` and a
/// certified split form of `i₁F` at every level.
pub fn kappa(f: &BraidFunctor, n_max: usize) -> Result<BraidFunctor, PolyError> {
    Ok(BraidFunctor::new(KappaRules { inner: f.clone(), levels: certified_levels(f, n_max)? }))
}

/// `δ₁F` on levels `0..=N`; requires `N + 1 ≤ F.eval_range()` and a
/// certified split form of `i₁F` at every level.
pub fn delta(f: &BraidFunctor, n_max: usize) -> Result<BraidFunctor, PolyError> {
    Ok(BraidFunctor::new(DeltaRules { inner: f.clone(), tau1: translation(1, f), levels: certified_levels(f, n_max)? }))
}

/// `δ₁` iterated `d` times, each step on the largest available range.
pub fn delta_power(f: &BraidFunctor, d: usize) -> Result<BraidFunctor, PolyError> {
    let mut g = f.clone();
    for _ in 0..d {
        if g.eval_range() == 0 {
            return Err(PolyError::Range { functor: g.name(), range: 0, needed: 1 });
        }
        g = delta(&g, g.eval_range() - 1)?;
    }
    Ok(g)
}

/// A natural isomorphism between two functors of dimension at most one at
/// every level `≤ N`, if one exists: components are `1 × 1` scalars fixed
/// at `1` wherever the source stabilization from the previous level is
/// zero, and propagated along `stab(n, n+1)` otherwise. The caller checks
/// naturality with [`lmkit_repfun::check_natural`].
pub fn rank_one_isomorphism(
    source: &BraidFunctor,
    target: &BraidFunctor,
    n_max: usize,
) -> Result<NaturalMap, PolyError> {
    need(source, n_max)?;
    need(target, n_max)?;
    let mut comps: Vec<PolyMatrix> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let (ds, dt) = (source.dim(n)?, target.dim(n)?);
        if ds != dt || ds > 1 {
            return Err(PolyError::NoIsomorphism(format!("dimensions {ds} and {dt} at level {n}")));
        }
        if ds == 0 {
            comps.push(PolyMatrix::zeros(0, 0));
            continue;
        }
        let prev_live = n > 0 && source.dim(n - 1)? == 1;
        let c = if prev_live {
            let s = source.stab(n - 1, n)?.get(0, 0).clone();
            let t = target.stab(n - 1, n)?.get(0, 0).clone();
            if s.is_zero() {
                PolyMatrix::identity(1)
            } else if s.is_unit() {
                PolyMatrix::scalar(1, &(&(&t * comps[n - 1].get(0, 0)) * &s.inverse()?))
            } else {
                return Err(PolyError::NoIsomorphism(format!("stabilization {s} at level {n}")));
            }
        } else {
            PolyMatrix::identity(1)
        };
        comps.push(c);
    }
    let comps = Arc::new(comps);
    let name = format!("{} ≅ {}", source.name(), target.name());
    Ok(NaturalMap::new(&name, source, target, move |n| comps.get(n).cloned().ok_or(RepError::BadStabilization(n, n))))
}
