//! The functor criterion and the natural-transformation criterion as
//! executable, range-bounded checks.

use std::fmt;
use std::sync::Arc;

use lmkit_braidcat::{words_up_to, BraidWord};
use lmkit_laurent::PolyMatrix;

use crate::error::RepError;
use crate::functor::BraidFunctor;
use crate::report::CheckReport;

/// Verifies, for all levels up to `max_level`:
/// * `F(σ_i)F(σ_i^{-1}) = F(σ_i^{-1})F(σ_i) = Id`, the braid relations and
///   the far commutations;
/// * `stab(n, n) = Id` and `stab(n′, n″)·stab(n, n′) = stab(n, n″)`;
/// * the intertwining `stab(n, n′)·F(σ) = F(ψ ♮ σ)·stab(n, n′)` for all
///   freely reduced words `σ ∈ B_n`, `ψ ∈ B_{n′−n}` of length `≤ max_len`;
/// * `split(n, n′)·stab(n, n′) = Id` wherever a retraction is declared.
pub fn check_functor_criterion(f: &BraidFunctor, max_level: usize, max_len: usize) -> Result<CheckReport, RepError> {
    let mut report = CheckReport::new("functor criterion", &f.name(), max_level, Some(max_len));
    for n in 0..=max_level {
        let id = PolyMatrix::identity(f.dim(n)?);
        for i in 1..n as i64 {
            let a = f.generator(n, i)?;
            let b = f.generator(n, -i)?;
            let words = [format!("s{i}")];
            report.compare("inverse", n, None, &words, &a.mul(&b)?, &id);
            report.compare("inverse", n, None, &words, &b.mul(&a)?, &id);
            for j in i + 1..n as i64 {
                let c = f.generator(n, j)?;
                if j == i + 1 {
                    let lhs = a.mul(&c)?.mul(&a)?;
                    let rhs = c.mul(&a)?.mul(&c)?;
                    report.compare("braid relation", n, None, &[format!("s{i} s{j} s{i}")], &lhs, &rhs);
                } else {
                    report.compare("commutation", n, None, &[format!("s{i} s{j}")], &a.mul(&c)?, &c.mul(&a)?);
                }
            }
        }
        report.compare("stab identity", n, Some(n), &[], &f.stab(n, n)?, &id);
    }
    for n in 0..=max_level {
        for n1 in n..=max_level {
            let s = f.stab(n, n1)?;
            for n2 in n1..=max_level {
                let lhs = f.stab(n1, n2)?.mul(&s)?;
                report.compare("stab composition", n, Some(n2), &[format!("via {n1}")], &lhs, &f.stab(n, n2)?);
            }
            if let Some(r) = f.split(n, n1) {
                let r = r?;
                report.compare("retraction", n, Some(n1), &[], &r.mul(&s)?, &PolyMatrix::identity(f.dim(n)?));
            }
            if n1 == n {
                continue;
            }
            let sigmas = words_up_to(n, max_len);
            let psis = words_up_to(n1 - n, max_len);
            for sigma in &sigmas {
                let lhs = s.mul(&f.braid_matrix(sigma)?)?;
                for psi in &psis {
                    let rhs = f.braid_matrix(&psi.monoidal(sigma))?.mul(&s)?;
                    report.compare("intertwining", n, Some(n1), &[sigma.to_string(), psi.to_string()], &lhs, &rhs);
                }
            }
        }
    }
    Ok(report)
}

/// A family of matrices `η_n: F(n) → G(n)`.
#[derive(Clone)]
pub struct NaturalMap {
    name: String,
    source: BraidFunctor,
    target: BraidFunctor,
    components: Arc<dyn Fn(usize) -> Result<PolyMatrix, RepError> + Send + Sync>,
}

impl fmt::Debug for NaturalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NaturalMap")
            .field("name", &self.name)
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .finish()
    }
}

impl NaturalMap {
    /// Builds a candidate natural map from its components.
    pub fn new(
        name: &str,
        source: &BraidFunctor,
        target: &BraidFunctor,
        components: impl Fn(usize) -> Result<PolyMatrix, RepError> + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), source: source.clone(), target: target.clone(), components: Arc::new(components) }
    }

    /// The identity of `F`.
    pub fn identity(f: &BraidFunctor) -> Self {
        let g = f.clone();
        Self::new("identity", f, f, move |n| Ok(PolyMatrix::identity(g.dim(n)?)))
    }

    /// Name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Source functor.
    pub fn source(&self) -> &BraidFunctor {
        &self.source
    }

    /// Target functor.
    pub fn target(&self) -> &BraidFunctor {
        &self.target
    }

    /// `η_n`.
    pub fn component(&self, n: usize) -> Result<PolyMatrix, RepError> {
        (self.components)(n)
    }
}

/// Verifies `η_n·F(σ_i) = G(σ_i)·η_n` and `η_{n′}·F(stab) = G(stab)·η_n` for
/// all `n ≤ n′ ≤ max_level`, plus component shapes.
pub fn check_natural(eta: &NaturalMap, max_level: usize) -> Result<CheckReport, RepError> {
    let (f, g) = (&eta.source, &eta.target);
    let mut report = CheckReport::new("naturality", &eta.name, max_level, None);
    let mut comps = Vec::new();
    for n in 0..=max_level {
        let c = eta.component(n)?;
        let shape_ok = c.rows() == g.dim(n)? && c.cols() == f.dim(n)?;
        report.require(shape_ok, "component shape", n, None, &[]);
        if !shape_ok {
            return Ok(report);
        }
        for i in 1..n as i64 {
            let lhs = c.mul(&f.generator(n, i)?)?;
            let rhs = g.generator(n, i)?.mul(&c)?;
            report.compare("generator", n, None, &[format!("s{i}")], &lhs, &rhs);
        }
        comps.push(c);
    }
    for n in 0..=max_level {
        for n1 in n + 1..=max_level {
            let lhs = comps[n1].mul(&f.stab(n, n1)?)?;
            let rhs = g.stab(n, n1)?.mul(&comps[n])?;
            report.compare("stabilization", n, Some(n1), &[], &lhs, &rhs);
        }
    }
    Ok(report)
}

/// True when `F(u) = F(v)` exactly (used for braid identities in tests).
pub fn same_image(f: &BraidFunctor, u: &BraidWord, v: &BraidWord) -> Result<bool, RepError> {
    Ok(f.braid_matrix(u)? == f.braid_matrix(v)?)
}
