//! Morphisms of the bracket category built on the braid groupoid.

use std::fmt;

use lmkit_freegroup::{artin_action, FreeGroupMap, FreeWord};
use serde::{Deserialize, Serialize};

use crate::error::BraidError;
use crate::word::{braiding, BraidWord};

/// A morphism `[n′−n, σ]: n → n′`, with `σ ∈ B_{n′}`.
///
/// Two representatives define the same morphism when they differ by
/// precomposition with `ψ ♮ id_n`, `ψ ∈ B_{n′−n}`; the derived `PartialEq`
/// compares representatives only — use [`ubeta_equal`] for the class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMorphism", into = "RawMorphism")]
pub struct UBetaMorphism {
    source: usize,
    target: usize,
    word: BraidWord,
}

#[derive(Serialize, Deserialize)]
struct RawMorphism {
    source: usize,
    target: usize,
    word: Vec<i64>,
}

impl TryFrom<RawMorphism> for UBetaMorphism {
    type Error = BraidError;

    fn try_from(raw: RawMorphism) -> Result<Self, BraidError> {
        UBetaMorphism::new(raw.source, raw.target, BraidWord::new(raw.target, &raw.word)?)
    }
}

impl From<UBetaMorphism> for RawMorphism {
    fn from(m: UBetaMorphism) -> Self {
        RawMorphism { source: m.source, target: m.target, word: m.word.letters().to_vec() }
    }
}

impl UBetaMorphism {
    /// Builds `[target − source, word]`.
    pub fn new(source: usize, target: usize, word: BraidWord) -> Result<Self, BraidError> {
        if target < source {
            return Err(BraidError::InvalidMorphism(format!("target {target} below source {source}")));
        }
        if word.strands() != target {
            return Err(BraidError::InvalidMorphism(format!("word on {} strands for target {target}", word.strands())));
        }
        Ok(Self { source, target, word })
    }

    /// The identity `[0, id_n]`.
    pub fn identity(n: usize) -> Self {
        Self { source: n, target: n, word: BraidWord::identity(n) }
    }

    /// An automorphism `[0, σ]`.
    pub fn automorphism(word: BraidWord) -> Self {
        Self { source: word.strands(), target: word.strands(), word }
    }

    /// The canonical morphism `[n′−n, id_{n′}]`.
    pub fn stabilization(n: usize, n_prime: usize) -> Result<Self, BraidError> {
        Self::new(n, n_prime, BraidWord::identity(n_prime))
    }

    /// Source object.
    pub fn source(&self) -> usize {
        self.source
    }

    /// Target object.
    pub fn target(&self) -> usize {
        self.target
    }

    /// Representative braid on `target` strands.
    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    /// `target − source`.
    pub fn difference(&self) -> usize {
        self.target - self.source
    }
}

impl fmt::Display for UBetaMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]: {} -> {}", self.difference(), self.word, self.source, self.target)
    }
}

/// The composite `g ∘ f`: `[n″−n′, g] ∘ [n′−n, f] = [n″−n, g ∘ (id_{n″−n′} ♮ f)]`.
pub fn ubeta_compose(g: &UBetaMorphism, f: &UBetaMorphism) -> Result<UBetaMorphism, BraidError> {
    if f.target != g.source {
        return Err(BraidError::NotComposable(format!("{g} after {f}")));
    }
    let shifted = f.word.shift_right(g.difference());
    UBetaMorphism::new(f.source, g.target, g.word.compose(&shifted)?)
}

/// The monoidal product
/// `[m′−m, g] ♮ [n′−n, f] = [(m′−m)+(n′−n), (g ♮ f) ∘ (id_{m′−m} ♮ b_{m,n′−n}^{-1} ♮ id_n)]`.
pub fn ubeta_monoidal(g: &UBetaMorphism, f: &UBetaMorphism) -> UBetaMorphism {
    let (m, m_prime) = (g.source, g.target);
    let n = f.source;
    let twist = BraidWord::identity(m_prime - m).monoidal(&braiding(m, f.difference()).inverse()).extend(n);
    let word = g.word.monoidal(&f.word).compose(&twist).expect("both on m′ + n′ strands");
    UBetaMorphism { source: m + n, target: m_prime + f.target, word }
}

/// Decides whether two representatives define the same morphism.
///
/// `[d, σ] = [d, σ′]` iff `σ^{-1}σ′ ∈ B_d ♮ id_n`. Membership is decided
/// exactly through the Artin action, which is faithful: the braids of
/// `B_{d+n}` fixing the free generators `g_{d+1}, …, g_{d+n}` are exactly
/// those supported on the first `d` strands. The first moved generator is
/// returned as a witness when the classes differ.
pub fn ubeta_equal(f: &UBetaMorphism, g: &UBetaMorphism) -> Result<Result<(), MorphismWitness>, BraidError> {
    if f.source != g.source || f.target != g.target {
        return Ok(Err(MorphismWitness::Objects));
    }
    let x = f.word.inverse().compose(&g.word)?;
    let action = artin_word_action(&x)?;
    for k in f.difference() + 1..=f.target {
        let gen = FreeWord::generator(f.target, k).map_err(|e| BraidError::InvalidMorphism(e.to_string()))?;
        if action.image(k) != &gen {
            return Ok(Err(MorphismWitness::MovedGenerator { generator: k, image: action.image(k).to_string() }));
        }
    }
    Ok(Ok(()))
}

/// Why two morphisms differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismWitness {
    /// Different sources or targets.
    Objects,
    /// `σ^{-1}σ′` moves a generator that braids of `B_d ♮ id_n` fix.
    MovedGenerator { generator: usize, image: String },
}

/// The Artin automorphism of a braid word (written order is composition
/// order, so the map of `[a, b]` is `a(σ_a) ∘ a(σ_b)`).
pub fn artin_word_action(w: &BraidWord) -> Result<FreeGroupMap, BraidError> {
    let mut out = FreeGroupMap::identity(w.strands());
    for &l in w.letters() {
        let g = artin_action(w.strands(), l).map_err(|e| BraidError::InvalidMorphism(e.to_string()))?;
        out = out.compose(&g).map_err(|e| BraidError::InvalidMorphism(e.to_string()))?;
    }
    Ok(out)
}
