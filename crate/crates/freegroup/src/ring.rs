//! The group ring `𝕂[F_n]`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use lmkit_laurent::LaurentPoly;

use crate::error::FreeGroupError;
use crate::word::FreeWord;

/// A finite `𝕂`-linear combination of reduced words of one rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    rank: usize,
    terms: BTreeMap<FreeWord, LaurentPoly>,
}

impl GroupRingElement {
    /// The zero element.
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    /// The unit `1 = 1·e`.
    pub fn one(rank: usize) -> Self {
        Self::from_word(FreeWord::identity(rank))
    }

    /// The basis element `1·w`.
    pub fn from_word(w: FreeWord) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    /// The single term `λ·w`.
    pub fn term(w: FreeWord, lambda: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        let rank = w.rank();
        if !lambda.is_zero() {
            terms.insert(w, lambda);
        }
        Self { rank, terms }
    }

    /// Ambient rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The terms `(word, coefficient)` in word order.
    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Number of terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `λ·w` in place.
    pub fn add_term(&mut self, w: FreeWord, lambda: &LaurentPoly) {
        if lambda.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += lambda;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(lambda.clone());
            }
        }
    }

    fn check(&self, other: &GroupRingElement) -> Result<(), FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    /// Sum.
    pub fn add(&self, other: &GroupRingElement) -> Result<GroupRingElement, FreeGroupError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    /// Difference.
    pub fn sub(&self, other: &GroupRingElement) -> Result<GroupRingElement, FreeGroupError> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> GroupRingElement {
        self.scale(&LaurentPoly::from_int(-1))
    }

    /// Scalar multiple.
    pub fn scale(&self, lambda: &LaurentPoly) -> GroupRingElement {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(c * lambda));
        }
        out
    }

    /// Convolution product.
    pub fn mul(&self, other: &GroupRingElement) -> Result<GroupRingElement, FreeGroupError> {
        self.check(other)?;
        let mut out = Self::zero(self.rank);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v)?, &(a * b));
            }
        }
        Ok(out)
    }

    /// Right multiplication by a group element.
    pub fn mul_word(&self, w: &FreeWord) -> Result<GroupRingElement, FreeGroupError> {
        let mut out = Self::zero(self.rank);
        for (u, a) in &self.terms {
            out.add_term(u.mul(w)?, a);
        }
        Ok(out)
    }

    /// The augmentation `Σ λ_w ∈ 𝕂`.
    pub fn augmentation(&self) -> LaurentPoly {
        self.terms.values().fold(LaurentPoly::zero(), |acc, c| &acc + c)
    }
}

/// Prints `"(poly)[word] + …"`, or `"0"`.
impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})[{w}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(2, s).unwrap()
    }

    #[test]
    fn arithmetic_and_display() {
        let a = GroupRingElement::from_word(w("g1"));
        let b = GroupRingElement::term(w("g2^-1"), "1 - t".parse().unwrap());
        let s = a.add(&b).unwrap();
        assert_eq!(s.to_string(), "(1)[g1] + (1 - t)[g2^-1]");
        assert!(s.sub(&s).unwrap().is_zero());
        let p = a.mul(&GroupRingElement::from_word(w("g1^-1"))).unwrap();
        assert_eq!(p, GroupRingElement::one(2));
        assert_eq!(s.augmentation(), "2 - t".parse().unwrap());
        assert_eq!(GroupRingElement::zero(2).to_string(), "0");
    }
}
