//! Families of homomorphisms `ς_n: F_n → B_{n+1}`.

use std::fmt;
use std::sync::Arc;

use lmkit_freegroup::FreeWord;

use crate::error::BraidError;
use crate::word::BraidWord;

type Rule = dyn Fn(usize, usize) -> BraidWord + Send + Sync;

/// A family `ς_n: F_n → B_{n+1}`, given by the image of each free
/// generator `g_i` (1-based) and extended multiplicatively.
#[derive(Clone)]
pub struct SigmaFamily {
    name: String,
    rule: Arc<Rule>,
}

impl SigmaFamily {
    /// The pure braid family:
    /// `g_i ↦ σ_1^{-1} ⋯ σ_{i−1}^{-1} σ_i² σ_{i−1} ⋯ σ_1`.
    pub fn pure_braid() -> Self {
        Self::custom("pure-braid", pure_braid_generator)
    }

    /// The trivial family: every word maps to `id_{n+1}`.
    pub fn trivial() -> Self {
        Self::custom("trivial", |n, _| BraidWord::identity(n + 1))
    }

    /// A family given by an explicit generator rule `(n, i) ↦ ς_n(g_i)`,
    /// which must return a word on `n + 1` strands.
    pub fn custom(name: &str, rule: impl Fn(usize, usize) -> BraidWord + Send + Sync + 'static) -> Self {
        Self { name: name.to_string(), rule: Arc::new(rule) }
    }

    /// Looks a family up by name (`pure-braid` / `pure_braid`, `trivial`).
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "pure-braid" | "pure_braid" => Some(Self::pure_braid()),
            "trivial" => Some(Self::trivial()),
            _ => None,
        }
    }

    /// Family name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// `ς_n(g_i)` on `n + 1` strands.
    pub fn generator(&self, n: usize, i: usize) -> Result<BraidWord, BraidError> {
        let w = (self.rule)(n, i);
        if w.strands() != n + 1 {
            return Err(BraidError::StrandMismatch(w.strands(), n + 1));
        }
        Ok(w)
    }

    /// True for the trivial family (detected by name).
    pub fn is_trivial(&self) -> bool {
        self.name == "trivial"
    }
}

impl fmt::Debug for SigmaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SigmaFamily").field("name", &self.name).finish()
    }
}

fn pure_braid_generator(n: usize, i: usize) -> BraidWord {
    let mut letters: Vec<i64> = (1..i as i64).map(|j| -j).collect();
    letters.extend([i as i64, i as i64]);
    letters.extend((1..i as i64).rev());
    BraidWord::new(n + 1, &letters).expect("1 ≤ i ≤ n")
}

/// `ς_n(w)` for a word `w ∈ F_n`.
pub fn sigma_eval(s: &SigmaFamily, w: &FreeWord) -> Result<BraidWord, BraidError> {
    let n = w.rank();
    let mut out = BraidWord::identity(n + 1);
    for &(g, e) in w.syllables() {
        out = out.compose(&s.generator(n, g)?.pow(e))?;
    }
    Ok(out)
}
