//! The canonical map `i₁F: F → τ₁F` in split form.
//!
//! `i₁F(n) = F([1, id_{n+1}]) = F.stab(n, n+1)`. Exact elimination with unit
//! pivots finds invertible `P`, `Q` with `P · i₁ · Q` a partial permutation
//! matrix; when the remainder after the last unit pivot is exactly zero the
//! rank is certified and `P`, `Q` yield a complement of the image, the
//! projection onto the cokernel, and a basis of the kernel. No evaluation
//! or probabilistic rank is involved.

use lmkit_laurent::{LaurentPoly, PolyMatrix};
use lmkit_repfun::BraidFunctor;
use serde::Serialize;

use crate::error::{need, PolyError};

/// Whether the elimination certified the rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certification {
    Certified,
    Uncertified,
}

/// The result of unit-pivot elimination on an `m × k` matrix `S`:
/// `P · S · Q` has a single `1` at each pivot and zeros elsewhere (when
/// certified).
#[derive(Clone, Debug)]
pub struct Elimination {
    pub p: PolyMatrix,
    pub p_inv: PolyMatrix,
    pub q: PolyMatrix,
    pub q_inv: PolyMatrix,
    /// `(row, col)` of each pivot, in the order found.
    pub pivots: Vec<(usize, usize)>,
    pub status: Certification,
}

fn row_axpy(m: &mut PolyMatrix, target: usize, source: usize, f: &LaurentPoly) {
    for c in 0..m.cols() {
        let s = m.get(source, c);
        if s.is_zero() {
            continue;
        }
        let v = m.get(target, c) - &(f * s);
        m.set(target, c, v);
    }
}

fn col_axpy(m: &mut PolyMatrix, target: usize, source: usize, f: &LaurentPoly) {
    for r in 0..m.rows() {
        let s = m.get(r, source);
        if s.is_zero() {
            continue;
        }
        let v = m.get(r, target) - &(f * s);
        m.set(r, target, v);
    }
}

fn scale_row(m: &mut PolyMatrix, r: usize, f: &LaurentPoly) {
    for c in 0..m.cols() {
        let v = m.get(r, c) * f;
        m.set(r, c, v);
    }
}

fn scale_col(m: &mut PolyMatrix, c: usize, f: &LaurentPoly) {
    for r in 0..m.rows() {
        let v = m.get(r, c) * f;
        m.set(r, c, v);
    }
}

impl Elimination {
    /// Eliminates `s`. Pivots are taken column by column among unused rows
    /// and columns, preferring an entry equal to `1`, then any unit.
    pub fn new(s: &PolyMatrix) -> Self {
        let (m, k) = (s.rows(), s.cols());
        let mut a = s.clone();
        let (mut p, mut p_inv) = (PolyMatrix::identity(m), PolyMatrix::identity(m));
        let (mut q, mut q_inv) = (PolyMatrix::identity(k), PolyMatrix::identity(k));
        let (mut row_used, mut col_used) = (vec![false; m], vec![false; k]);
        let mut pivots = Vec::new();
        loop {
            let find = |pred: &dyn Fn(&LaurentPoly) -> bool| {
                (0..k)
                    .filter(|&c| !col_used[c])
                    .find_map(|c| (0..m).find(|&r| !row_used[r] && pred(a.get(r, c))).map(|r| (r, c)))
            };
            let Some((pr, pc)) = find(&|e| e.is_one()).or_else(|| find(&|e| e.is_unit())) else {
                break;
            };
            let u = a.get(pr, pc).clone();
            if !u.is_one() {
                let u_inv = u.inverse().expect("pivot is a unit");
                scale_col(&mut a, pc, &u_inv);
                scale_col(&mut q, pc, &u_inv);
                scale_row(&mut q_inv, pc, &u);
            }
            for r in 0..m {
                let f = a.get(r, pc).clone();
                if r == pr || f.is_zero() {
                    continue;
                }
                row_axpy(&mut a, r, pr, &f);
                row_axpy(&mut p, r, pr, &f);
                col_axpy(&mut p_inv, pr, r, &-&f);
            }
            for c in 0..k {
                let f = a.get(pr, c).clone();
                if c == pc || f.is_zero() {
                    continue;
                }
                col_axpy(&mut a, c, pc, &f);
                col_axpy(&mut q, c, pc, &f);
                row_axpy(&mut q_inv, pc, c, &-&f);
            }
            row_used[pr] = true;
            col_used[pc] = true;
            pivots.push((pr, pc));
        }
        let remainder_zero =
            (0..m).filter(|&r| !row_used[r]).all(|r| (0..k).filter(|&c| !col_used[c]).all(|c| a.get(r, c).is_zero()));
        let status = if remainder_zero { Certification::Certified } else { Certification::Uncertified };
        Self { p, p_inv, q, q_inv, pivots, status }
    }

    /// The certified rank.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Rows of `P · S · Q` without a pivot, increasing.
    pub fn free_rows(&self) -> Vec<usize> {
        let used: Vec<usize> = self.pivots.iter().map(|&(r, _)| r).collect();
        (0..self.p.rows()).filter(|r| !used.contains(r)).collect()
    }

    /// Columns of `P · S · Q` without a pivot, increasing.
    pub fn free_cols(&self) -> Vec<usize> {
        let used: Vec<usize> = self.pivots.iter().map(|&(_, c)| c).collect();
        (0..self.q.rows()).filter(|c| !used.contains(c)).collect()
    }
}

/// `i₁F(n)` together with its certified split data.
#[derive(Clone, Debug, Serialize)]
pub struct SplitStabilization {
    /// The functor's name.
    pub functor: String,
    /// The level `n`.
    pub level: usize,
    pub status: Certification,
    /// `i₁F(n) = F.stab(n, n+1)`.
    #[serde(skip)]
    pub inclusion: PolyMatrix,
    /// Certified rank of the inclusion.
    pub rank: usize,
    /// A left inverse of the inclusion, when it is injective.
    #[serde(skip)]
    pub retraction: Option<PolyMatrix>,
    /// Columns spanning a complement of the image: `[inclusion | C]` is
    /// invertible when the inclusion is injective.
    #[serde(skip)]
    pub complement: PolyMatrix,
    /// The projection `F(n+1) → δ₁F(n)` killing the image, with
    /// `projection · complement = Id`.
    #[serde(skip)]
    pub projection: PolyMatrix,
    /// A basis of `κ₁F(n) = ker i₁F(n)` as columns.
    #[serde(skip)]
    pub kernel: PolyMatrix,
    /// A left inverse of `kernel`.
    #[serde(skip)]
    pub kernel_coords: PolyMatrix,
    /// Whether the functor declares a retraction of this stabilization that
    /// really is one.
    pub declared_split: bool,
}

impl SplitStabilization {
    /// Fails unless certified.
    pub fn certified(&self) -> Result<&Self, PolyError> {
        match self.status {
            Certification::Certified => Ok(self),
            Certification::Uncertified => {
                Err(PolyError::Uncertified { functor: self.functor.clone(), level: self.level })
            }
        }
    }

    /// `dim κ₁F(n)`.
    pub fn kernel_dim(&self) -> usize {
        self.kernel.cols()
    }

    /// `dim δ₁F(n)`.
    pub fn cokernel_dim(&self) -> usize {
        self.projection.rows()
    }
}

/// Splits a matrix `S: F(n) → F(n+1)` (used for `i₁` and for other
/// stabilization-like maps).
pub fn split_matrix(functor: &str, level: usize, s: &PolyMatrix) -> SplitStabilization {
    let e = Elimination::new(s);
    let (rows, cols) = (e.free_rows(), e.free_cols());
    let all_rows: Vec<usize> = (0..s.rows()).collect();
    let all_cols: Vec<usize> = (0..s.cols()).collect();
    let retraction = (e.status == Certification::Certified && e.rank() == s.cols()).then(|| {
        let mut sel = PolyMatrix::zeros(s.cols(), s.rows());
        for &(r, c) in &e.pivots {
            sel.set(c, r, LaurentPoly::one());
        }
        e.q.mul(&sel).and_then(|m| m.mul(&e.p)).expect("shapes agree")
    });
    SplitStabilization {
        functor: functor.into(),
        level,
        status: e.status,
        inclusion: s.clone(),
        rank: e.rank(),
        retraction,
        complement: e.p_inv.submatrix(&all_rows, &rows),
        projection: e.p.submatrix(&rows, &all_rows),
        kernel: e.q.submatrix(&all_cols, &cols),
        kernel_coords: e.q_inv.submatrix(&cols, &all_cols),
        declared_split: false,
    }
}

/// `i₁F(n)` in split form; requires `n + 1 ≤ F.eval_range()`.
pub fn i1_map(f: &BraidFunctor, n: usize) -> Result<SplitStabilization, PolyError> {
    need(f, n + 1)?;
    let s = f.stab(n, n + 1)?;
    let mut out = split_matrix(&f.name(), n, &s);
    if let Some(r) = f.split(n, n + 1) {
        out.declared_split = r?.mul(&s)?.is_identity();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lmkit_repfun::{last_coordinates, Builtin};

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn check_identities(s: &PolyMatrix) -> SplitStabilization {
        let sp = split_matrix("test", 0, s);
        assert_eq!(sp.status, Certification::Certified);
        assert!(sp.projection.mul(s).unwrap().is_zero());
        assert!(sp.projection.mul(&sp.complement).unwrap().is_identity());
        assert!(s.mul(&sp.kernel).unwrap().is_zero());
        assert!(sp.kernel_coords.mul(&sp.kernel).unwrap().is_identity());
        assert_eq!(sp.rank + sp.kernel_dim(), s.cols());
        assert_eq!(sp.rank + sp.cokernel_dim(), s.rows());
        sp
    }

    #[test]
    fn last_coordinates_split_as_coordinates() {
        let s = last_coordinates(4, 3);
        let sp = check_identities(&s);
        assert_eq!(sp.retraction.unwrap(), s.transpose());
        assert_eq!(
            sp.complement,
            PolyMatrix::from_fn(4, 1, |r, _| if r == 0 { LaurentPoly::one() } else { LaurentPoly::zero() })
        );
        let full = s.hstack(&sp.complement).unwrap();
        assert!(full.det().unwrap().is_unit());
    }

    #[test]
    fn dense_unit_matrix() {
        let s = PolyMatrix::from_rows(
            vec![vec![lp("1 - t"), lp("t")], vec![lp("t"), lp("0")], vec![lp("2 + q"), lp("t*q")]],
            2,
        )
        .unwrap();
        let sp = check_identities(&s);
        assert!(sp.retraction.unwrap().mul(&s).unwrap().is_identity());
        assert!(s.hstack(&sp.complement).unwrap().det().unwrap().is_unit());
    }

    #[test]
    fn rank_deficient_with_kernel() {
        let s = PolyMatrix::from_rows(vec![vec![lp("1"), lp("t")], vec![lp("q"), lp("t*q")]], 2).unwrap();
        let sp = check_identities(&s);
        assert_eq!((sp.rank, sp.kernel_dim(), sp.cokernel_dim()), (1, 1, 1));
        assert!(sp.retraction.is_none());
    }

    #[test]
    fn zero_map_keeps_everything() {
        let sp = check_identities(&PolyMatrix::zeros(2, 3));
        assert_eq!((sp.rank, sp.kernel_dim(), sp.cokernel_dim()), (0, 3, 2));
    }

    #[test]
    fn non_unit_remainder_is_uncertified() {
        let s = PolyMatrix::from_rows(vec![vec![lp("1 + t")]], 1).unwrap();
        let sp = split_matrix("test", 0, &s);
        assert_eq!(sp.status, Certification::Uncertified);
        assert!(matches!(sp.certified(), Err(PolyError::Uncertified { .. })));
    }

    #[test]
    fn builtins_declare_their_split() {
        let tym = Builtin::Tym(LaurentPoly::t()).functor(5);
        let sp = i1_map(&tym, 3).unwrap();
        assert!(sp.declared_split);
        assert_eq!(sp.inclusion, last_coordinates(4, 3));
        assert_eq!(sp.retraction.unwrap(), last_coordinates(4, 3).transpose());
        let x = i1_map(&Builtin::Constant.functor(3), 1).unwrap();
        assert!(x.inclusion.is_identity() && x.retraction.unwrap().is_identity());
    }

    #[test]
    fn atomic_inclusion_is_zero_at_its_level() {
        let a = Builtin::Atomic(2).functor(4);
        let sp = i1_map(&a, 2).unwrap();
        assert_eq!((sp.inclusion.rows(), sp.inclusion.cols()), (0, 1));
        assert_eq!(sp.kernel_dim(), 1);
    }
}
