//! Homomorphisms between free groups.

use std::fmt;

use crate::error::FreeGroupError;
use crate::fox::{fox_derivatives, AugIdealElement};
use crate::ring::GroupRingElement;
use crate::word::FreeWord;

/// A homomorphism `F_source → F_target`, determined by the images of the
/// generators. An automorphism may carry a verified inverse certificate.
///
/// Equality compares the homomorphisms (ranks and images) only.
#[derive(Clone, Debug)]
pub struct FreeGroupMap {
    source_rank: usize,
    target_rank: usize,
    images: Vec<FreeWord>,
    inverse: Option<Vec<FreeWord>>,
}

impl FreeGroupMap {
    /// Builds a map from generator images (all of rank `target_rank`).
    pub fn new(source_rank: usize, target_rank: usize, images: Vec<FreeWord>) -> Result<Self, FreeGroupError> {
        if images.len() != source_rank {
            return Err(FreeGroupError::RankMismatch(images.len(), source_rank));
        }
        if let Some(w) = images.iter().find(|w| w.rank() != target_rank) {
            return Err(FreeGroupError::RankMismatch(w.rank(), target_rank));
        }
        Ok(Self { source_rank, target_rank, images, inverse: None })
    }

    /// The identity of `F_n`.
    pub fn identity(n: usize) -> Self {
        let images: Vec<FreeWord> = (1..=n).map(|i| FreeWord::generator(n, i).expect("in range")).collect();
        Self { source_rank: n, target_rank: n, images: images.clone(), inverse: Some(images) }
    }

    /// Attaches an inverse certificate after checking both composites.
    pub fn with_inverse(mut self, inverse_images: Vec<FreeWord>) -> Result<Self, FreeGroupError> {
        let inv = FreeGroupMap::new(self.target_rank, self.source_rank, inverse_images.clone())?;
        if !self.compose(&inv)?.is_identity() || !inv.compose(&self)?.is_identity() {
            return Err(FreeGroupError::InvalidCertificate);
        }
        self.inverse = Some(inverse_images);
        Ok(self)
    }

    /// Source rank.
    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    /// Target rank.
    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    /// Generator images.
    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of the 1-based generator `g_i`.
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    /// The verified inverse, when a certificate is attached.
    pub fn inverse(&self) -> Option<FreeGroupMap> {
        self.inverse.as_ref().map(|inv| FreeGroupMap {
            source_rank: self.target_rank,
            target_rank: self.source_rank,
            images: inv.clone(),
            inverse: Some(self.images.clone()),
        })
    }

    /// True when every generator is fixed (equal ranks).
    pub fn is_identity(&self) -> bool {
        self.source_rank == self.target_rank
            && self.images.iter().enumerate().all(|(i, w)| w.syllables() == [(i + 1, 1)])
    }

    fn check_source(&self, rank: usize) -> Result<(), FreeGroupError> {
        if rank != self.source_rank {
            return Err(FreeGroupError::RankMismatch(rank, self.source_rank));
        }
        Ok(())
    }

    /// Homomorphic image of a word.
    pub fn apply_word(&self, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        self.check_source(w.rank())?;
        let mut out = FreeWord::identity(self.target_rank);
        for &(g, e) in w.syllables() {
            out = out.mul(&self.images[g - 1].pow(e))?;
        }
        Ok(out)
    }

    /// Linear extension to the group ring.
    pub fn apply_ring(&self, x: &GroupRingElement) -> Result<GroupRingElement, FreeGroupError> {
        self.check_source(x.rank())?;
        let mut out = GroupRingElement::zero(self.target_rank);
        for (w, c) in x.terms() {
            out.add_term(self.apply_word(w)?, c);
        }
        Ok(out)
    }

    /// Image of `Σ (g_i − 1)·c_i`, re-expanded in the target Fox basis:
    /// coordinate `j` of the result is `Σ_i ∂_j(φ(g_i))·φ(c_i)`.
    pub fn apply_aug(&self, x: &AugIdealElement) -> Result<AugIdealElement, FreeGroupError> {
        self.check_source(x.rank())?;
        let mut out = AugIdealElement::zero(self.target_rank);
        for (i, c) in x.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image_c = self.apply_ring(c)?;
            let d = fox_derivatives(&self.images[i]).mul_right(&image_c)?;
            out = out.add(&d)?;
        }
        Ok(out)
    }

    /// The composite `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &FreeGroupMap) -> Result<FreeGroupMap, FreeGroupError> {
        if other.target_rank != self.source_rank {
            return Err(FreeGroupError::RankMismatch(other.target_rank, self.source_rank));
        }
        let images = other.images.iter().map(|w| self.apply_word(w)).collect::<Result<Vec<_>, _>>()?;
        let inverse = match (&self.inverse, &other.inverse) {
            (Some(_), Some(_)) => {
                let si = self.inverse().expect("present");
                let oi = other.inverse().expect("present");
                Some(oi.compose_plain(&si)?.images)
            }
            _ => None,
        };
        Ok(FreeGroupMap { source_rank: other.source_rank, target_rank: self.target_rank, images, inverse })
    }

    fn compose_plain(&self, other: &FreeGroupMap) -> Result<FreeGroupMap, FreeGroupError> {
        let images = other.images.iter().map(|w| self.apply_word(w)).collect::<Result<Vec<_>, _>>()?;
        FreeGroupMap::new(other.source_rank, self.target_rank, images)
    }

    /// The first generator on which two maps with equal ranks differ.
    pub fn first_difference(&self, other: &FreeGroupMap) -> Option<usize> {
        self.images.iter().zip(&other.images).position(|(a, b)| a != b).map(|i| i + 1)
    }
}

impl PartialEq for FreeGroupMap {
    fn eq(&self, other: &Self) -> bool {
        self.source_rank == other.source_rank && self.target_rank == other.target_rank && self.images == other.images
    }
}

impl Eq for FreeGroupMap {}

impl std::hash::Hash for FreeGroupMap {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.source_rank.hash(state);
        self.target_rank.hash(state);
        self.images.hash(state);
    }
}

impl fmt::Display for FreeGroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lmkit_laurent::LaurentPoly;

    fn w(rank: usize, s: &str) -> FreeWord {
        FreeWord::parse(rank, s).unwrap()
    }

    fn map(rank: usize, imgs: &[&str]) -> FreeGroupMap {
        FreeGroupMap::new(rank, rank, imgs.iter().map(|s| w(rank, s)).collect()).unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let id = FreeGroupMap::identity(2);
        let x = w(2, "g1*g2^-1");
        assert_eq!(id.apply_word(&x).unwrap(), x);
        let r = GroupRingElement::term(x.clone(), LaurentPoly::t());
        assert_eq!(id.apply_ring(&r).unwrap(), r);
        let a = fox_derivatives(&x);
        assert_eq!(id.apply_aug(&a).unwrap(), a);
    }

    #[test]
    fn aug_action_matches_word_action() {
        let phi = map(2, &["g2", "g2^-1*g1*g2"]);
        let x = w(2, "g1^2*g2^-1");
        let lhs = phi.apply_aug(&fox_derivatives(&x)).unwrap();
        assert_eq!(lhs, fox_derivatives(&phi.apply_word(&x).unwrap()));
    }

    #[test]
    fn inverse_certificates_are_checked() {
        let phi = map(2, &["g2", "g1^-1"]);
        assert!(phi.clone().with_inverse(vec![w(2, "g2^-1"), w(2, "g1")]).is_ok());
        assert_eq!(phi.with_inverse(vec![w(2, "g2"), w(2, "g1")]), Err(FreeGroupError::InvalidCertificate));
    }

    #[test]
    fn rank_mismatch() {
        let phi = map(2, &["g2", "g1"]);
        assert!(phi.apply_word(&w(3, "g1")).is_err());
    }
}
