//! Specialisation at rational points and rational linear algebra.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::LaurentError;
use crate::poly::Rational;

/// A point `(t, q)` with both coordinates nonzero, so Laurent monomials are
/// defined there.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvaluationPoint {
    t_value: Rational,
    q_value: Rational,
}

impl EvaluationPoint {
    /// Builds a point; rejects zero coordinates.
    pub fn new(t_value: Rational, q_value: Rational) -> Result<Self, LaurentError> {
        if t_value.is_zero() || q_value.is_zero() {
            return Err(LaurentError::ZeroCoordinate);
        }
        Ok(Self { t_value, q_value })
    }

    /// The `t` coordinate.
    pub fn t_value(&self) -> &Rational {
        &self.t_value
    }

    /// The `q` coordinate.
    pub fn q_value(&self) -> &Rational {
        &self.q_value
    }
}

/// Draws `count` reproducible evaluation points from a ChaCha stream.
///
/// Coordinates are fractions `±a/b` with `1 ≤ a ≤ 97`, `1 ≤ b ≤ 89`, and the
/// values `±1` are avoided because braid representations degenerate there.
pub fn seeded_points(seed: u64, count: usize) -> Vec<EvaluationPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let num: i64 = rng.gen_range(1..=97);
        let den: i64 = rng.gen_range(1..=89);
        let sign: i64 = if rng.gen_bool(0.5) { -1 } else { 1 };
        let r = Rational::new((sign * num).into(), den.into());
        if r != Rational::one() && r != -Rational::one() {
            return r;
        }
    };
    (0..count)
        .map(|_| {
            let t = draw(&mut rng);
            let q = draw(&mut rng);
            EvaluationPoint::new(t, q).expect("nonzero by construction")
        })
        .collect()
}

/// A dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LaurentError> {
        if entries.len() != rows * cols {
            return Err(LaurentError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    /// Rank by Gaussian elimination over ℚ.
    pub fn rank(&self) -> usize {
        let mut a = self.entries.clone();
        let (m, n) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&r| !a[r * n + col].is_zero()) else {
                continue;
            };
            if p != rank {
                for c in 0..n {
                    a.swap(p * n + c, rank * n + c);
                }
            }
            let pivot = a[rank * n + col].clone();
            for r in rank + 1..m {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] / &pivot;
                for c in col..n {
                    let delta = &factor * &a[rank * n + c];
                    a[r * n + c] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coordinates_rejected() {
        assert_eq!(EvaluationPoint::new(Rational::zero(), Rational::one()), Err(LaurentError::ZeroCoordinate));
    }

    #[test]
    fn seeded_points_are_reproducible() {
        assert_eq!(seeded_points(7, 5), seeded_points(7, 5));
        assert_ne!(seeded_points(7, 5), seeded_points(8, 5));
    }

    #[test]
    fn rational_rank() {
        let r = |x: i64| Rational::from_integer(x.into());
        let m = RatMatrix::new(2, 3, vec![r(1), r(2), r(3), r(2), r(4), r(6)]).unwrap();
        assert_eq!(m.rank(), 1);
        let id = RatMatrix::new(2, 2, vec![r(1), r(0), r(0), r(1)]).unwrap();
        assert_eq!(id.rank(), 2);
    }
}
