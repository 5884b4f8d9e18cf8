//! Executable forms of the splitting theorem `δ₁LM ≅ τ₂ ⊕ LM δ₁`, the
//! commutation `κ₁LM ≅ LM κ₁`, the degree theorems, and the commutation of
//! `τ₁` with `δ₁` and `κ₁`.
//!
//! Every identification is an explicit family of matrices checked for unit
//! determinant and for naturality against all generators and
//! stabilizations in range.

use std::sync::Arc;

use lmkit_laurent::PolyMatrix;
use lmkit_longmoody::{check_splitting, check_xi_lemma, lm_apply, splitting_maps, LMConfig};
use lmkit_repfun::{check_natural, direct_sum, translation, BraidFunctor, Builtin, CheckReport, NaturalMap, RepError};
use serde::Serialize;

use crate::degree::{estimate_strong_degree, DegreeReport};
use crate::error::{need, PolyError};
use crate::functors::{delta, kappa};
use crate::split::i1_map;

fn require_iso(report: &mut CheckReport, relation: &str, n: usize, m: &PolyMatrix) -> Result<(), PolyError> {
    let ok = m.is_square() && m.det()?.is_unit();
    report.require(ok, relation, n, None, &[]);
    Ok(())
}

/// Memoised components for a [`NaturalMap`].
fn natural_map(name: &str, source: &BraidFunctor, target: &BraidFunctor, comps: Vec<PolyMatrix>) -> NaturalMap {
    let comps = Arc::new(comps);
    NaturalMap::new(name, source, target, move |n| comps.get(n).cloned().ok_or(RepError::BadStabilization(n, n)))
}

/// The isomorphism `δ₁(LM F) → τ₂F ⊕ LM(δ₁F)` on levels `≤ N`, induced by
/// `(Id ⊕ LM(π)) · [υ | ξ′]^{-1}` on a complement of the image of
/// `i₁LM(F)`, where `π` projects `τ₁F` onto `δ₁F`.
pub fn delta_lm_isomorphism(cfg: &LMConfig, f: &BraidFunctor, n_max: usize) -> Result<NaturalMap, PolyError> {
    need(f, n_max + 2)?;
    let base = cfg.base(f)?;
    let lm = lm_apply(cfg, f)?;
    let source = delta(&lm, n_max)?;
    let target = direct_sum(&translation(2, &base), &lm_apply(cfg, &delta(f, n_max + 1)?)?);
    let mut comps = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let phi_inv = splitting_maps(cfg, f, n)?.combined()?.inverse()?;
        let pi = i1_map(f, n + 1)?.projection;
        let lm_pi = PolyMatrix::identity(base.dim(n + 2)?).direct_sum(&PolyMatrix::block_diagonal(&vec![pi; n]));
        let c = i1_map(&lm, n)?.complement;
        comps.push(lm_pi.mul(&phi_inv)?.mul(&c)?);
    }
    Ok(natural_map("δ₁LM ≅ τ₂ ⊕ LMδ₁", &source, &target, comps))
}

/// The isomorphism `LM(κ₁F) → κ₁(LM F)` on levels `≤ N`: `LM` of the
/// kernel inclusion, written in the kernel basis of `i₁LM(F)`.
pub fn kappa_lm_isomorphism(cfg: &LMConfig, f: &BraidFunctor, n_max: usize) -> Result<NaturalMap, PolyError> {
    need(f, n_max + 2)?;
    let lm = lm_apply(cfg, f)?;
    let source = lm_apply(cfg, &kappa(f, n_max + 1)?)?;
    let target = kappa(&lm, n_max)?;
    let mut comps = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let k = i1_map(f, n + 1)?.kernel;
        let lm_k = PolyMatrix::block_diagonal(&vec![k; n]);
        comps.push(i1_map(&lm, n)?.kernel_coords.mul(&lm_k)?);
    }
    Ok(natural_map("LMκ₁ ≅ κ₁LM", &source, &target, comps))
}

/// The splitting theorem on levels `≤ N`: (i) `[υ | ξ′]` has unit
/// determinant and is natural; (ii) `ξ′ ∘ LM(i₁) = i₁LM`; (iii) the induced
/// map `δ₁(LM F) → τ₂F ⊕ LM(δ₁F)` has unit determinant and is natural;
/// (iv) `dim κ₁(LM F)(n) = dim LM(κ₁F)(n)` and the induced map is an
/// invertible natural map. Requires `F` on levels `≤ N + 2`.
pub fn verify_splitting_theorem(cfg: &LMConfig, f: &BraidFunctor, n_max: usize) -> Result<CheckReport, PolyError> {
    need(f, n_max + 2)?;
    let subject = format!("lm({}; {})", cfg.name(), f.name());
    let mut report = CheckReport::new("splitting theorem", &subject, n_max, None);
    report.absorb(check_splitting(cfg, f, n_max)?);
    report.absorb(check_xi_lemma(cfg, f, n_max)?);

    let delta_iso = delta_lm_isomorphism(cfg, f, n_max)?;
    for n in 0..=n_max {
        require_iso(&mut report, "δ₁LM ≅ τ₂ ⊕ LMδ₁: unit determinant", n, &delta_iso.component(n)?)?;
    }
    report.absorb(check_natural(&delta_iso, n_max)?);

    let kappa_iso = kappa_lm_isomorphism(cfg, f, n_max)?;
    for n in 0..=n_max {
        let (ds, dt) = (kappa_iso.source().dim(n)?, kappa_iso.target().dim(n)?);
        report.require(ds == dt, "κ₁LM and LMκ₁: equal dimension", n, None, &[]);
        if ds > 0 && dt > 0 {
            require_iso(&mut report, "LMκ₁ ≅ κ₁LM: unit determinant", n, &kappa_iso.component(n)?)?;
        }
    }
    report.absorb(check_natural(&kappa_iso, n_max)?);
    Ok(report)
}

/// `τ₁(δ₁F) → δ₁(τ₁F)`: the images of `i₁` in `F(n+2)` differ by
/// `F(b_{1,1}^{-1} ♮ id_n)`, which induces the map on cokernels.
pub fn tau_delta_isomorphism(f: &BraidFunctor, n_max: usize) -> Result<NaturalMap, PolyError> {
    need(f, n_max + 2)?;
    let source = translation(1, &delta(f, n_max + 1)?);
    let tau = translation(1, f);
    let target = delta(&tau, n_max)?;
    let mut comps = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let b = f.generator(n + 2, -1)?;
        comps.push(i1_map(&tau, n)?.projection.mul(&b)?.mul(&i1_map(f, n + 1)?.complement)?);
    }
    Ok(natural_map("τ₁δ₁ ≅ δ₁τ₁", &source, &target, comps))
}

/// `τ₁(κ₁F) → κ₁(τ₁F)`: both are the same subspace of `F(n+1)`, written in
/// two kernel bases.
pub fn tau_kappa_isomorphism(f: &BraidFunctor, n_max: usize) -> Result<NaturalMap, PolyError> {
    need(f, n_max + 2)?;
    let source = translation(1, &kappa(f, n_max + 1)?);
    let tau = translation(1, f);
    let target = kappa(&tau, n_max)?;
    let mut comps = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        comps.push(i1_map(&tau, n)?.kernel_coords.mul(&i1_map(f, n + 1)?.kernel)?);
    }
    Ok(natural_map("τ₁κ₁ ≅ κ₁τ₁", &source, &target, comps))
}

/// `τ₁δ₁ ≅ δ₁τ₁` and `τ₁κ₁ ≅ κ₁τ₁` on levels `≤ N`: unit determinants and
/// naturality.
pub fn check_translation_commutation(f: &BraidFunctor, n_max: usize) -> Result<CheckReport, PolyError> {
    let mut report = CheckReport::new("translation commutes with δ₁ and κ₁", &f.name(), n_max, None);
    for eta in [tau_delta_isomorphism(f, n_max)?, tau_kappa_isomorphism(f, n_max)?] {
        for n in 0..=n_max {
            let c = eta.component(n)?;
            require_iso(&mut report, &format!("{}: unit determinant", eta.name()), n, &c)?;
        }
        report.absorb(check_natural(&eta, n_max)?);
    }
    Ok(report)
}

/// `τ_k(A_m) ≅ A_{m−k}` (for `k ≤ m`) on levels `≤ N`, by the identity
/// components: a single copy, not `m` of them.
pub fn check_translated_atomic(m: usize, k: usize, n_max: usize) -> Result<CheckReport, PolyError> {
    let tau = translation(k, &Builtin::Atomic(m).functor(n_max + k));
    let target = Builtin::Atomic(m.saturating_sub(k)).functor(n_max);
    let mut report = CheckReport::new("translated atomic", &tau.name(), n_max, None);
    let expected = |n: usize| usize::from(k <= m && n == m - k);
    for n in 0..=n_max {
        report.require(tau.dim(n)? == expected(n), "dimension", n, None, &[]);
    }
    if k <= m {
        let t = tau.clone();
        let eta = NaturalMap::new("identity", &tau, &target, move |n| Ok(PolyMatrix::identity(t.dim(n)?)));
        report.absorb(check_natural(&eta, n_max)?);
    }
    Ok(report)
}

/// Degree estimates for `F`, `LM(F)` and the translations of `F`.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeTheoremReport {
    pub subject: String,
    pub range: usize,
    pub base: DegreeReport,
    pub lm: DegreeReport,
    /// `(k, report for τ_k F)` for `k = 1, 2`.
    pub translations: Vec<(usize, DegreeReport)>,
    /// `τ_k(A_3) ≅ A_{3−k}` for `k = 1, 2`.
    pub atomic_translation: CheckReport,
    /// Human-readable failures; empty when everything holds.
    pub failures: Vec<String>,
}

impl DegreeTheoremReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `degree(LM F) = degree(F) + 1` with very-strong preservation, and
/// `degree(τ_k F) = degree(F)` for very strong `F` (`k = 1, 2`), all on
/// levels `≤ N`; plus `τ_k(A_3) ≅ A_{3−k}`. Requires `F` on levels
/// `≤ N + d_max + 4`; `d_max` bounds the degree searched for `F`.
pub fn verify_degree_theorems(
    cfg: &LMConfig,
    f: &BraidFunctor,
    n_max: usize,
    d_max: usize,
) -> Result<DegreeTheoremReport, PolyError> {
    need(f, n_max + d_max + 4)?;
    let base = estimate_strong_degree(f, n_max, d_max)?;
    let lm = estimate_strong_degree(&lm_apply(cfg, f)?, n_max, d_max + 1)?;
    let mut failures = Vec::new();
    match (base.strong_degree_at_range, lm.strong_degree_at_range) {
        (Some(d), Some(e)) if e == d + 1 => {}
        (d, e) => failures.push(format!("degree {d:?} of F, {e:?} of LM(F)")),
    }
    if base.very_strong && !lm.very_strong {
        failures.push("LM(F) is not very strong".into());
    }
    let mut translations = Vec::new();
    if base.very_strong {
        for k in 1..=2 {
            let r = estimate_strong_degree(&translation(k, f), n_max, d_max)?;
            if r.strong_degree_at_range != base.strong_degree_at_range || !r.very_strong {
                failures.push(format!("τ_{k}F: {r}"));
            }
            translations.push((k, r));
        }
    }
    let mut atomic_translation = check_translated_atomic(3, 1, n_max)?;
    atomic_translation.absorb(check_translated_atomic(3, 2, n_max)?);
    if !atomic_translation.passed() {
        failures.push(atomic_translation.to_string());
    }
    Ok(DegreeTheoremReport {
        subject: format!("lm({}; {})", cfg.name(), f.name()),
        range: n_max,
        base,
        lm,
        translations,
        atomic_translation,
        failures,
    })
}
