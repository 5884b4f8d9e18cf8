//! Right Fox calculus: coordinates on the augmentation ideal.

use std::fmt;

use lmkit_laurent::LaurentPoly;

use crate::error::FreeGroupError;
use crate::ring::GroupRingElement;
use crate::word::FreeWord;

/// An element `Σ_i (g_i − 1)·c_i` of the augmentation ideal of `𝕂[F_n]`,
/// stored by its unique coordinates `c_1, …, c_n` on the free right basis
/// `{g_i − 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AugIdealElement {
    rank: usize,
    coords: Vec<GroupRingElement>,
}

impl AugIdealElement {
    /// The zero element.
    pub fn zero(rank: usize) -> Self {
        Self { rank, coords: vec![GroupRingElement::zero(rank); rank] }
    }

    /// Builds an element from explicit coordinates.
    pub fn new(rank: usize, coords: Vec<GroupRingElement>) -> Result<Self, FreeGroupError> {
        if coords.len() != rank {
            return Err(FreeGroupError::RankMismatch(coords.len(), rank));
        }
        if let Some(c) = coords.iter().find(|c| c.rank() != rank) {
            return Err(FreeGroupError::RankMismatch(c.rank(), rank));
        }
        Ok(Self { rank, coords })
    }

    /// The basis element `(g_i − 1)·c`.
    pub fn basis(rank: usize, i: usize, c: GroupRingElement) -> Result<Self, FreeGroupError> {
        if i == 0 || i > rank {
            return Err(FreeGroupError::GeneratorOutOfRange { index: i as i64, rank });
        }
        let mut coords = vec![GroupRingElement::zero(rank); rank];
        coords[i - 1] = c;
        Self::new(rank, coords)
    }

    /// Ambient rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coordinates `c_1, …, c_n` (0-based slice).
    pub fn coords(&self) -> &[GroupRingElement] {
        &self.coords
    }

    /// Coordinate `c_i` for a 1-based generator index.
    pub fn coord(&self, i: usize) -> &GroupRingElement {
        &self.coords[i - 1]
    }

    /// Sum.
    pub fn add(&self, other: &AugIdealElement) -> Result<AugIdealElement, FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch(self.rank, other.rank));
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect::<Result<_, _>>()?;
        Ok(Self { rank: self.rank, coords })
    }

    /// Right multiplication by a group-ring element (the right module action).
    pub fn mul_right(&self, r: &GroupRingElement) -> Result<AugIdealElement, FreeGroupError> {
        let coords = self.coords.iter().map(|c| c.mul(r)).collect::<Result<_, _>>()?;
        Ok(Self { rank: self.rank, coords })
    }

    /// Expands `Σ_i (g_i − 1)·c_i` in the group ring.
    pub fn expand(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.rank);
        for (i, c) in self.coords.iter().enumerate() {
            let g = FreeWord::generator(self.rank, i + 1).expect("index in range");
            for (w, lambda) in c.terms() {
                out.add_term(g.mul(w).expect("same rank"), lambda);
                out.add_term(w.clone(), &(-lambda));
            }
        }
        out
    }
}

impl fmt::Display for AugIdealElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "(g{} - 1)·[{}]", i + 1, c)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Right Fox derivatives `(∂_1 w, …, ∂_n w)`, the coordinates of `w − 1`.
///
/// Unrolling `∂_i(uv) = ∂_i(u)·v + ∂_i(v)` over the letters
/// `w = x_1 ⋯ x_L` gives `∂_i(w) = Σ_k ∂_i(x_k)·x_{k+1}⋯x_L`, where
/// `∂_i(g_i) = 1` and `∂_i(g_i^{-1}) = −g_i^{-1}`.
pub fn fox_derivatives(w: &FreeWord) -> AugIdealElement {
    let rank = w.rank();
    let letters = w.letters();
    let mut coords = vec![GroupRingElement::zero(rank); rank];
    let one = LaurentPoly::one();
    let minus_one = LaurentPoly::from_int(-1);
    // suffix = x_{k+1} ⋯ x_L, built right to left.
    let mut suffix = FreeWord::identity(rank);
    for &l in letters.iter().rev() {
        let g = l.unsigned_abs() as usize;
        let letter = FreeWord::from_letters(rank, &[l]).expect("letter in range");
        if l > 0 {
            coords[g - 1].add_term(suffix.clone(), &one);
            suffix = letter.mul(&suffix).expect("same rank");
        } else {
            suffix = letter.mul(&suffix).expect("same rank");
            coords[g - 1].add_term(suffix.clone(), &minus_one);
        }
    }
    AugIdealElement { rank, coords }
}
