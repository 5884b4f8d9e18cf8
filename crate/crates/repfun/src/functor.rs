//! The functor abstraction: dimensions, generator matrices, stabilization
//! maps and optional splitting data, with memoised evaluation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use lmkit_braidcat::{BraidWord, UBetaMorphism};
use lmkit_laurent::PolyMatrix;
use serde::Serialize;

use crate::error::RepError;

/// Matrices larger than this many entries are recomputed rather than cached.
const CACHE_LIMIT: usize = 40_000;

/// The defining data of a functor on the bracket category, level by level.
///
/// Implementations are only ever called with `n ≤ eval_range()`, valid
/// positive Artin indices `1 ≤ i < n`, and `n ≤ n′` for stabilizations;
/// [`BraidFunctor`] performs those checks and memoises the results.
pub trait FunctorRules: Send + Sync {
    /// Display name.
    fn name(&self) -> String;

    /// Largest level at which the rules are defined.
    fn eval_range(&self) -> usize;

    /// `dim F(n)`.
    fn dim(&self, n: usize) -> usize;

    /// `F(σ_i)` at level `n`.
    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError>;

    /// `F(σ_i^{-1})` when a closed form is available; otherwise the inverse
    /// of [`FunctorRules::generator`] is computed exactly.
    fn inverse_generator(&self, _n: usize, _i: usize) -> Option<Result<PolyMatrix, RepError>> {
        None
    }

    /// `F([n′−n, id_{n′}])`, a `dim(n′) × dim(n)` matrix.
    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError>;

    /// A retraction `r` with `r · stab(n, n′) = Id`, when declared.
    fn split(&self, _n: usize, _n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        None
    }
}

#[derive(Default)]
struct Cache {
    generators: Mutex<HashMap<(usize, i64), PolyMatrix>>,
    stabs: Mutex<HashMap<(usize, usize), PolyMatrix>>,
}

/// A computable object of the functor category, sharing its rules and
/// memo tables between clones. Memo writes are idempotent, so concurrent
/// readers and writers are safe.
#[derive(Clone)]
pub struct BraidFunctor {
    rules: Arc<dyn FunctorRules>,
    cache: Arc<Cache>,
}

impl fmt::Debug for BraidFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BraidFunctor").field("name", &self.name()).field("eval_range", &self.eval_range()).finish()
    }
}

impl BraidFunctor {
    /// Wraps a set of rules.
    pub fn new(rules: impl FunctorRules + 'static) -> Self {
        Self { rules: Arc::new(rules), cache: Arc::new(Cache::default()) }
    }

    /// Display name.
    pub fn name(&self) -> String {
        self.rules.name()
    }

    /// Largest level at which the functor can be evaluated.
    pub fn eval_range(&self) -> usize {
        self.rules.eval_range()
    }

    fn check_level(&self, n: usize) -> Result<(), RepError> {
        if n > self.eval_range() {
            return Err(RepError::OutOfRange { functor: self.name(), level: n, range: self.eval_range() });
        }
        Ok(())
    }

    /// `dim F(n)`.
    pub fn dim(&self, n: usize) -> Result<usize, RepError> {
        self.check_level(n)?;
        Ok(self.rules.dim(n))
    }

    /// `F(σ_i^{±1})` at level `n` for a signed Artin index.
    pub fn generator(&self, n: usize, letter: i64) -> Result<PolyMatrix, RepError> {
        self.check_level(n)?;
        let i = letter.unsigned_abs() as usize;
        if letter == 0 || i >= n {
            return Err(RepError::BadGenerator { level: n, letter });
        }
        if let Some(m) = self.cache.generators.lock().expect("cache lock").get(&(n, letter)) {
            return Ok(m.clone());
        }
        let m = if letter > 0 {
            self.rules.generator(n, i)?
        } else {
            match self.rules.inverse_generator(n, i) {
                Some(m) => m?,
                None => self.generator(n, i as i64)?.inverse()?,
            }
        };
        let d = self.rules.dim(n);
        if m.rows() != d || m.cols() != d {
            return Err(RepError::Incompatible(format!(
                "{} generator {letter} at level {n} is {}x{}, expected {d}x{d}",
                self.name(),
                m.rows(),
                m.cols()
            )));
        }
        if m.rows() * m.cols() <= CACHE_LIMIT {
            self.cache.generators.lock().expect("cache lock").insert((n, letter), m.clone());
        }
        Ok(m)
    }

    /// `F([n′−n, id_{n′}])`.
    pub fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        self.check_level(n_prime)?;
        if n_prime < n {
            return Err(RepError::BadStabilization(n, n_prime));
        }
        if n == n_prime {
            return Ok(PolyMatrix::identity(self.rules.dim(n)));
        }
        if let Some(m) = self.cache.stabs.lock().expect("cache lock").get(&(n, n_prime)) {
            return Ok(m.clone());
        }
        let m = self.rules.stab(n, n_prime)?;
        let (r, c) = (self.rules.dim(n_prime), self.rules.dim(n));
        if m.rows() != r || m.cols() != c {
            return Err(RepError::Incompatible(format!(
                "{} stab({n}, {n_prime}) is {}x{}, expected {r}x{c}",
                self.name(),
                m.rows(),
                m.cols()
            )));
        }
        if m.rows() * m.cols() <= CACHE_LIMIT {
            self.cache.stabs.lock().expect("cache lock").insert((n, n_prime), m.clone());
        }
        Ok(m)
    }

    /// The declared retraction of `stab(n, n′)`, if any.
    pub fn split(&self, n: usize, n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        if let Err(e) = self.check_level(n_prime) {
            return Some(Err(e));
        }
        if n == n_prime {
            return Some(Ok(PolyMatrix::identity(self.rules.dim(n))));
        }
        self.rules.split(n, n_prime)
    }

    /// `F(σ)` for a braid word, multiplied in written order.
    pub fn braid_matrix(&self, w: &BraidWord) -> Result<PolyMatrix, RepError> {
        let n = w.strands();
        let mut m = PolyMatrix::identity(self.dim(n)?);
        for &l in w.letters() {
            m = m.mul(&self.generator(n, l)?)?;
        }
        Ok(m)
    }

    /// `F([n′−n, σ]) = F(σ) · F([n′−n, id_{n′}])`.
    pub fn functor_eval(&self, phi: &UBetaMorphism) -> Result<PolyMatrix, RepError> {
        Ok(self.braid_matrix(phi.word())?.mul(&self.stab(phi.source(), phi.target())?)?)
    }

    /// Dumps level `n`: dimension, generator matrices and the stabilization
    /// to level `n + 1` when that level is in range.
    pub fn dump(&self, n: usize) -> Result<FunctorDump, RepError> {
        let mut generators = BTreeMap::new();
        for i in 1..n {
            generators.insert(format!("s{i}"), self.generator(n, i as i64)?.to_string_rows());
        }
        let mut stab_to = BTreeMap::new();
        if n < self.eval_range() {
            stab_to.insert((n + 1).to_string(), self.stab(n, n + 1)?.to_string_rows());
        }
        Ok(FunctorDump { name: self.name(), n, dim: self.dim(n)?, generators, stab_to })
    }
}

/// Serialisable dump of one level of a functor; matrices are rows of
/// polynomial strings in the canonical grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorDump {
    pub name: String,
    pub n: usize,
    pub dim: usize,
    pub generators: BTreeMap<String, Vec<Vec<String>>>,
    pub stab_to: BTreeMap<String, Vec<Vec<String>>>,
}

/// The `big × small` embedding onto the last `small` coordinates.
pub fn last_coordinates(big: usize, small: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(big, small);
    for c in 0..small {
        m.set(big - small + c, c, lmkit_laurent::LaurentPoly::one());
    }
    m
}
