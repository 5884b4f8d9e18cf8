//! Freely reduced words in `F_n`.

use std::fmt;

use crate::error::FreeGroupError;

/// A freely reduced word in `F_rank = ⟨g_1, …, g_rank⟩`.
///
/// Stored as syllables `(generator, exponent)` with 1-based generators,
/// nonzero exponents and no two adjacent syllables on the same generator.
/// The empty word is the unit `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    syllables: Vec<(usize, i64)>,
}

impl FreeWord {
    /// The unit of `F_rank`.
    pub fn identity(rank: usize) -> Self {
        Self { rank, syllables: Vec::new() }
    }

    /// The generator `g_i` of `F_rank`.
    pub fn generator(rank: usize, i: usize) -> Result<Self, FreeGroupError> {
        Self::from_syllables(rank, &[(i, 1)])
    }

    /// Reduces an arbitrary syllable list.
    pub fn from_syllables(rank: usize, syllables: &[(usize, i64)]) -> Result<Self, FreeGroupError> {
        let mut w = Self::identity(rank);
        for &(g, e) in syllables {
            if g == 0 || g > rank {
                return Err(FreeGroupError::GeneratorOutOfRange { index: g as i64, rank });
            }
            w.push(g, e);
        }
        Ok(w)
    }

    /// Reduces a list of signed letters (`+i` for `g_i`, `-i` for `g_i^{-1}`).
    pub fn from_letters(rank: usize, letters: &[i64]) -> Result<Self, FreeGroupError> {
        let syl: Vec<(usize, i64)> = letters.iter().map(|&l| (l.unsigned_abs() as usize, l.signum())).collect();
        if letters.contains(&0) {
            return Err(FreeGroupError::GeneratorOutOfRange { index: 0, rank });
        }
        Self::from_syllables(rank, &syl)
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le += e;
                if *le == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    /// Ambient rank `n`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The reduced syllables.
    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    /// True for the unit.
    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length (sum of absolute exponents).
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// True for the unit (length zero).
    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The signed letters `±i`, left to right.
    pub fn letters(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len());
        for &(g, e) in &self.syllables {
            for _ in 0..e.unsigned_abs() {
                out.push(g as i64 * e.signum());
            }
        }
        out
    }

    /// The reduced product `self · other`.
    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch(self.rank, other.rank));
        }
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push(g, e);
        }
        Ok(w)
    }

    /// The inverse word.
    pub fn inv(&self) -> FreeWord {
        Self { rank: self.rank, syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    /// Integer power.
    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut w = Self::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            for &(g, e) in &base.syllables {
                w.push(g, e);
            }
        }
        w
    }

    /// The same word viewed in a free group of larger (or equal) rank.
    pub fn widen(&self, rank: usize) -> Result<FreeWord, FreeGroupError> {
        if self.syllables.iter().any(|(g, _)| *g > rank) {
            return Err(FreeGroupError::RankMismatch(self.rank, rank));
        }
        Ok(Self { rank, syllables: self.syllables.clone() })
    }

    /// Parses `"g1*g2^-1*g1^2"` or `"e"` as a word of the given rank.
    pub fn parse(rank: usize, s: &str) -> Result<FreeWord, FreeGroupError> {
        let bad = || FreeGroupError::Parse(s.to_string());
        let s = s.trim();
        if s == "e" {
            return Ok(Self::identity(rank));
        }
        let mut syl = Vec::new();
        for part in s.split('*') {
            let part = part.trim();
            let body = part.strip_prefix('g').ok_or_else(bad)?;
            let (g, e) = match body.split_once('^') {
                Some((g, e)) => (g, e.trim().parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let g: usize = g.trim().parse().map_err(|_| bad())?;
            syl.push((g, e));
        }
        Self::from_syllables(rank, &syl)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        for (i, (g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "g{g}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(rank: usize, s: &str) -> FreeWord {
        FreeWord::parse(rank, s).unwrap()
    }

    #[test]
    fn cancellation_and_inverse() {
        assert!(w(2, "g1").mul(&w(2, "g1^-1")).unwrap().is_identity());
        assert_eq!(w(2, "g1*g2").inv(), w(2, "g2^-1*g1^-1"));
        assert!(w(2, "g2^-1*g1").mul(&w(2, "g1^-1*g2")).unwrap().is_identity());
        assert_eq!(w(3, "g1*g1*g2^0*g3"), w(3, "g1^2*g3"));
    }

    #[test]
    fn rank_checks() {
        assert_eq!(w(2, "g1").mul(&w(3, "g1")), Err(FreeGroupError::RankMismatch(2, 3)));
        assert!(FreeWord::generator(2, 3).is_err());
        assert!(FreeWord::parse(2, "x1").is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["e", "g1*g2^-1*g1^2", "g3^5"] {
            assert_eq!(w(3, s).to_string(), s);
        }
    }

    fn arb_word() -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((1usize..=3, prop::bool::ANY), 0..8).prop_map(|v| {
            let letters: Vec<i64> = v.into_iter().map(|(g, s)| if s { g as i64 } else { -(g as i64) }).collect();
            FreeWord::from_letters(3, &letters).unwrap()
        })
    }

    proptest! {
        #[test]
        fn group_axioms(a in arb_word(), b in arb_word(), c in arb_word()) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert!(a.mul(&a.inv()).unwrap().is_identity());
            prop_assert_eq!(a.mul(&FreeWord::identity(3)).unwrap(), a.clone());
            prop_assert_eq!(FreeWord::parse(3, &a.to_string()).unwrap(), a);
        }
    }
}
