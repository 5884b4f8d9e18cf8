//! Dense matrices over the Laurent ring.

use std::fmt;

use crate::error::LaurentError;
use crate::eval::{EvaluationPoint, RatMatrix};
use crate::poly::LaurentPoly;

/// A dense `rows × cols` matrix of Laurent polynomials, stored row-major.
///
/// Matrices act on column vectors from the left: entry `(r, c)` is the
/// coefficient of basis vector `r` in the image of basis vector `c`.
/// Empty shapes (`0 × k`, `k × 0`) are legal and model maps to or from the
/// zero module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

fn mismatch<T>(msg: String) -> Result<T, LaurentError> {
    Err(LaurentError::DimensionMismatch(msg))
}

impl PolyMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self, LaurentError> {
        if entries.len() != rows * cols {
            return mismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len()));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from a list of equally long rows; `cols` fixes the
    /// width when there are no rows.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>, cols: usize) -> Result<Self, LaurentError> {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return mismatch(format!("row {i} has {} entries, expected {cols}", row.len()));
            }
            entries.extend(row);
        }
        Ok(Self { rows: r, cols, entries })
    }

    /// Builds a matrix entrywise.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    /// The zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = LaurentPoly::one();
        }
        m
    }

    /// `y · Id_n`.
    pub fn scalar(n: usize, y: &LaurentPoly) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = y.clone();
        }
        m
    }

    /// The permutation matrix sending basis vector `c` to `perm[c]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (c, &r) in perm.iter().enumerate() {
            m.entries[r * n + c] = LaurentPoly::one();
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True when rows equal columns.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    /// Entry `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    /// Overwrites entry `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.entries[r * self.cols + c] = v;
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Matrix product `self · other`, skipping zero entries.
    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, LaurentError> {
        if self.cols != other.rows {
            return mismatch(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols));
        }
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let mut out = vec![LaurentPoly::zero(); m * n];
        for i in 0..m {
            let row = &mut out[i * n..(i + 1) * n];
            for l in 0..k {
                let a = &self.entries[i * k + l];
                if a.is_zero() {
                    continue;
                }
                let b_row = &other.entries[l * n..(l + 1) * n];
                let unit_one = a.is_one();
                for (acc, b) in row.iter_mut().zip(b_row) {
                    if b.is_zero() {
                        continue;
                    }
                    if unit_one {
                        *acc += b;
                    } else {
                        *acc += &(a * b);
                    }
                }
            }
        }
        Ok(Self { rows: m, cols: n, entries: out })
    }

    fn zip_with(
        &self,
        other: &PolyMatrix,
        what: &str,
        f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly,
    ) -> Result<PolyMatrix, LaurentError> {
        if self.rows != other.rows || self.cols != other.cols {
            return mismatch(format!("cannot {what} {}x{} and {}x{}", self.rows, self.cols, other.rows, other.cols));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Entrywise sum.
    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix, LaurentError> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, LaurentError> {
        self.zip_with(other, "subtract", |a, b| a - b)
    }

    /// Entrywise negation.
    pub fn neg(&self) -> PolyMatrix {
        self.map(|a| -a)
    }

    /// Scalar multiple `y · self`.
    pub fn scale(&self, y: &LaurentPoly) -> PolyMatrix {
        self.map(|a| a * y)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    /// Block-diagonal sum of a list of matrices.
    pub fn block_diagonal(blocks: &[PolyMatrix]) -> PolyMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            m.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        m
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i, j] · other`.
    pub fn kronecker(&self, other: &PolyMatrix) -> PolyMatrix {
        let (p, q) = (other.rows, other.cols);
        let mut m = Self::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for r in 0..p {
                    for c in 0..q {
                        let b = other.get(r, c);
                        if !b.is_zero() {
                            m.set(i * p + r, j * q + c, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// Transpose.
    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &PolyMatrix) -> Result<PolyMatrix, LaurentError> {
        if self.rows != other.rows {
            return mismatch(format!("hstack of {} and {} rows", self.rows, other.rows));
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        Ok(m)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &PolyMatrix) -> Result<PolyMatrix, LaurentError> {
        if self.cols != other.cols {
            return mismatch(format!("vstack of {} and {} columns", self.cols, other.cols));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Self { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// The submatrix on the given row and column indices (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// The contiguous block with top-left corner `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> PolyMatrix {
        Self::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Overwrites the block with top-left corner `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &PolyMatrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.entries[(r0 + r) * self.cols + c0 + c] = b.get(r, c).clone();
            }
        }
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    /// True for a square identity matrix.
    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// The first entry (row-major) where two equally shaped matrices differ.
    pub fn first_difference(&self, other: &PolyMatrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((usize::MAX, usize::MAX));
        }
        self.entries.iter().zip(&other.entries).position(|(a, b)| a != b).map(|i| (i / self.cols, i % self.cols))
    }

    /// Number of nonzero entries.
    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    ///
    /// Pivots are chosen among all remaining entries, preferring those with
    /// the fewest terms; every intermediate division is exact.
    pub fn det(&self) -> Result<LaurentPoly, LaurentError> {
        if !self.is_square() {
            return mismatch(format!("determinant of a {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n {
            let mut best: Option<(usize, usize, usize)> = None;
            for r in k..n {
                for c in k..n {
                    let e = &a[r * n + c];
                    if e.is_zero() {
                        continue;
                    }
                    let w = e.num_terms();
                    if best.is_none_or(|(_, _, bw)| w < bw) {
                        best = Some((r, c, w));
                        if w == 1 {
                            break;
                        }
                    }
                }
                if matches!(best, Some((_, _, 1))) {
                    break;
                }
            }
            let Some((pr, pc, _)) = best else {
                return Ok(LaurentPoly::zero());
            };
            if pr != k {
                for c in 0..n {
                    a.swap(pr * n + c, k * n + c);
                }
                negate = !negate;
            }
            if pc != k {
                for r in 0..n {
                    a.swap(r * n + pc, r * n + k);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for r in k + 1..n {
                let lead = a[r * n + k].clone();
                for c in k + 1..n {
                    let mut v = &pivot * &a[r * n + c];
                    if !lead.is_zero() {
                        v -= &(&lead * &a[k * n + c]);
                    }
                    a[r * n + c] =
                        if prev.is_one() { v } else { v.exact_div(&prev).expect("Bareiss division is exact") };
                }
                a[r * n + k] = LaurentPoly::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Exact inverse of a matrix whose determinant is a unit.
    ///
    /// Gauss–Jordan with unit pivots is tried first (no division beyond unit
    /// inverses); if some column has no unit pivot, fraction-free
    /// Gauss–Jordan on `[A | I]` produces `det · A^{-1}`, which is divided by
    /// the unit determinant.
    pub fn inverse(&self) -> Result<PolyMatrix, LaurentError> {
        if !self.is_square() {
            return mismatch(format!("inverse of a {}x{} matrix", self.rows, self.cols));
        }
        let inv = match self.unit_pivot_inverse() {
            Some(inv) => inv,
            None => self.fraction_free_inverse()?,
        };
        if !self.mul(&inv)?.is_identity() {
            return Err(LaurentError::NotInvertible);
        }
        Ok(inv)
    }

    fn unit_pivot_inverse(&self) -> Option<PolyMatrix> {
        let n = self.rows;
        let w = 2 * n;
        let mut a = vec![LaurentPoly::zero(); n * w];
        for r in 0..n {
            for c in 0..n {
                a[r * w + c] = self.get(r, c).clone();
            }
            a[r * w + n + r] = LaurentPoly::one();
        }
        for k in 0..n {
            let pr = (k..n).find(|&r| a[r * w + k].is_unit())?;
            if pr != k {
                for c in 0..w {
                    a.swap(pr * w + c, k * w + c);
                }
            }
            let pinv = a[k * w + k].inverse().ok()?;
            if !pinv.is_one() {
                for c in 0..w {
                    if !a[k * w + c].is_zero() {
                        a[k * w + c] = &a[k * w + c] * &pinv;
                    }
                }
            }
            let pivot_row: Vec<(usize, LaurentPoly)> =
                (0..w).filter(|&c| !a[k * w + c].is_zero()).map(|c| (c, a[k * w + c].clone())).collect();
            for r in 0..n {
                if r == k || a[r * w + k].is_zero() {
                    continue;
                }
                let factor = a[r * w + k].clone();
                for (c, v) in &pivot_row {
                    let delta = &factor * v;
                    a[r * w + c] -= &delta;
                }
            }
        }
        Some(Self::from_fn(n, n, |r, c| a[r * w + n + c].clone()))
    }

    fn fraction_free_inverse(&self) -> Result<PolyMatrix, LaurentError> {
        let n = self.rows;
        let w = 2 * n;
        let mut a = vec![LaurentPoly::zero(); n * w];
        for r in 0..n {
            for c in 0..n {
                a[r * w + c] = self.get(r, c).clone();
            }
            a[r * w + n + r] = LaurentPoly::one();
        }
        let mut prev = LaurentPoly::one();
        for k in 0..n {
            let pr = (k..n)
                .filter(|&r| !a[r * w + k].is_zero())
                .min_by_key(|&r| a[r * w + k].num_terms())
                .ok_or(LaurentError::NotInvertible)?;
            if pr != k {
                for c in 0..w {
                    a.swap(pr * w + c, k * w + c);
                }
            }
            let pivot = a[k * w + k].clone();
            for r in 0..n {
                if r == k {
                    continue;
                }
                let lead = a[r * w + k].clone();
                for c in 0..w {
                    if c == k {
                        continue;
                    }
                    let mut v = &pivot * &a[r * w + c];
                    if !lead.is_zero() {
                        v -= &(&lead * &a[k * w + c]);
                    }
                    a[r * w + c] = v.exact_div(&prev).ok_or(LaurentError::NotInvertible)?;
                }
                a[r * w + k] = LaurentPoly::zero();
            }
            prev = pivot;
        }
        let d_inv = prev.inverse()?;
        Ok(Self::from_fn(n, n, |r, c| &a[r * w + n + c] * &d_inv))
    }

    /// Specialises every entry at an evaluation point.
    pub fn eval(&self, p: &EvaluationPoint) -> RatMatrix {
        RatMatrix::new(self.rows, self.cols, self.entries.iter().map(|e| e.eval(p)).collect()).expect("shape preserved")
    }

    /// Maximum rank over the given evaluation points: a lower bound on the
    /// generic rank, exact with high probability.
    pub fn rank_probabilistic(&self, points: &[EvaluationPoint]) -> usize {
        points.iter().map(|p| self.eval(p).rank()).max().unwrap_or(0)
    }

    /// Canonical text of every entry, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect()).collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
