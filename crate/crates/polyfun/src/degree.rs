//! Strong and very strong polynomial degree, relative to a finite range.
//!
//! `F` has strong degree `≤ d` when `δ₁^{d+1}F = 0`, and is very strong of
//! degree `d` when moreover `κ₁(δ₁^j F) = 0` for all `j ≤ d`. Only levels
//! `≤ N` are examined, so every conclusion reads "δ₁^{d+1}F vanishes on
//! objects ≤ N".

use std::fmt;

use lmkit_repfun::BraidFunctor;
use serde::Serialize;

use crate::error::{need, PolyError};
use crate::functors::delta;
use crate::split::i1_map;

/// One stage `δ₁^d F` of the iteration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeEvidence {
    pub d: usize,
    /// `max_{n ≤ N} dim δ₁^d F(n)`.
    pub max_nonzero_dim: usize,
    /// `κ₁(δ₁^d F)` vanishes on levels `≤ N`.
    pub kappa_zero: bool,
}

/// The outcome of [`estimate_strong_degree`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub functor: String,
    pub range: usize,
    /// Least `d` with `δ₁^{d+1}F` zero on levels `≤ N` (`-1` for a functor
    /// that is already zero), or `None` when no `d ≤ d_max` works.
    pub strong_degree_at_range: Option<i64>,
    pub very_strong: bool,
    pub evidence: Vec<DegreeEvidence>,
    /// The range-relative reading of the conclusion.
    pub note: String,
    /// Set when an iterate had no certified split form; the evidence is
    /// then partial.
    pub uncertified: Option<String>,
}

impl DegreeReport {
    /// True when a degree was concluded.
    pub fn concluded(&self) -> bool {
        self.strong_degree_at_range.is_some()
    }
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.strong_degree_at_range {
            Some(d) => write!(
                f,
                "{}: strong degree {d}{} ({})",
                self.functor,
                if self.very_strong { ", very strong" } else { ", not very strong" },
                self.note
            ),
            None => write!(f, "{}: no degree concluded ({})", self.functor, self.note),
        }
    }
}

/// Iterates `δ₁` up to `d_max + 1` times on levels `≤ N`, examining `κ₁`
/// at every stage. `F` must be defined on levels `≤ N + d_max + 2`.
pub fn estimate_strong_degree(f: &BraidFunctor, n_max: usize, d_max: usize) -> Result<DegreeReport, PolyError> {
    need(f, n_max + d_max + 2)?;
    let mut report = DegreeReport {
        functor: f.name(),
        range: n_max,
        strong_degree_at_range: None,
        very_strong: false,
        evidence: Vec::new(),
        note: String::new(),
        uncertified: None,
    };
    let mut g = f.clone();
    for d in 0..=d_max + 1 {
        let max_dim = (0..=n_max).map(|n| g.dim(n)).collect::<Result<Vec<_>, _>>()?.into_iter().max().unwrap_or(0);
        let mut kappa_zero = true;
        if max_dim > 0 {
            for n in 0..=n_max {
                let s = i1_map(&g, n)?;
                if let Err(e) = s.certified() {
                    report.uncertified = Some(e.to_string());
                    break;
                }
                kappa_zero &= s.kernel_dim() == 0;
            }
        }
        report.evidence.push(DegreeEvidence { d, max_nonzero_dim: max_dim, kappa_zero });
        if report.uncertified.is_some() {
            break;
        }
        if max_dim == 0 {
            report.strong_degree_at_range = Some(d as i64 - 1);
            break;
        }
        if d > d_max {
            break;
        }
        match delta(&g, g.eval_range() - 1) {
            Ok(next) => g = next,
            Err(e @ PolyError::Uncertified { .. }) => {
                report.uncertified = Some(e.to_string());
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if let Some(d) = report.strong_degree_at_range {
        report.very_strong = report.evidence.iter().filter(|e| (e.d as i64) <= d).all(|e| e.kappa_zero);
        report.note = format!("delta^{} vanishes on objects <= {n_max}", d + 1);
    } else {
        report.note = format!("delta^{} does not vanish on objects <= {n_max}", report.evidence.len() - 1);
    }
    Ok(report)
}
