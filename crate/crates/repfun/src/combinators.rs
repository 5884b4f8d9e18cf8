//! Functor combinators: direct sum, tensor product, scalar twist,
//! translation (precomposition by `k ♮ −`), the zero functor and an
//! entry-corruption wrapper used as a negative control.

use lmkit_braidcat::{ubeta_monoidal, UBetaMorphism};
use lmkit_laurent::{LaurentPoly, PolyMatrix};

use crate::error::RepError;
use crate::functor::{BraidFunctor, FunctorRules};

fn common_range(f: &BraidFunctor, g: &BraidFunctor) -> usize {
    f.eval_range().min(g.eval_range())
}

struct DirectSum(BraidFunctor, BraidFunctor);

impl FunctorRules for DirectSum {
    fn name(&self) -> String {
        format!("sum({}; {})", self.0.name(), self.1.name())
    }
    fn eval_range(&self) -> usize {
        common_range(&self.0, &self.1)
    }
    fn dim(&self, n: usize) -> usize {
        self.0.dim(n).unwrap_or(0) + self.1.dim(n).unwrap_or(0)
    }
    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError> {
        Ok(self.0.generator(n, i as i64)?.direct_sum(&self.1.generator(n, i as i64)?))
    }
    fn inverse_generator(&self, n: usize, i: usize) -> Option<Result<PolyMatrix, RepError>> {
        let l = -(i as i64);
        Some((|| Ok(self.0.generator(n, l)?.direct_sum(&self.1.generator(n, l)?)))())
    }
    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        Ok(self.0.stab(n, n_prime)?.direct_sum(&self.1.stab(n, n_prime)?))
    }
    fn split(&self, n: usize, n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        let a = self.0.split(n, n_prime)?;
        let b = self.1.split(n, n_prime)?;
        Some((|| Ok(a?.direct_sum(&b?)))())
    }
}

/// `F ⊕ G`, blockwise.
pub fn direct_sum(f: &BraidFunctor, g: &BraidFunctor) -> BraidFunctor {
    BraidFunctor::new(DirectSum(f.clone(), g.clone()))
}

struct Tensor(BraidFunctor, BraidFunctor);

impl FunctorRules for Tensor {
    fn name(&self) -> String {
        format!("tensor({}; {})", self.0.name(), self.1.name())
    }
    fn eval_range(&self) -> usize {
        common_range(&self.0, &self.1)
    }
    fn dim(&self, n: usize) -> usize {
        self.0.dim(n).unwrap_or(0) * self.1.dim(n).unwrap_or(0)
    }
    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError> {
        Ok(self.0.generator(n, i as i64)?.kronecker(&self.1.generator(n, i as i64)?))
    }
    fn inverse_generator(&self, n: usize, i: usize) -> Option<Result<PolyMatrix, RepError>> {
        let l = -(i as i64);
        Some((|| Ok(self.0.generator(n, l)?.kronecker(&self.1.generator(n, l)?)))())
    }
    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        Ok(self.0.stab(n, n_prime)?.kronecker(&self.1.stab(n, n_prime)?))
    }
    fn split(&self, n: usize, n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        let a = self.0.split(n, n_prime)?;
        let b = self.1.split(n, n_prime)?;
        Some((|| Ok(a?.kronecker(&b?)))())
    }
}

/// `F ⊗ G`, via Kronecker products.
pub fn tensor(f: &BraidFunctor, g: &BraidFunctor) -> BraidFunctor {
    BraidFunctor::new(Tensor(f.clone(), g.clone()))
}

struct ScalarTwist {
    y: LaurentPoly,
    y_inv: LaurentPoly,
    inner: BraidFunctor,
}

impl FunctorRules for ScalarTwist {
    fn name(&self) -> String {
        format!("twist({}; {})", self.y, self.inner.name())
    }
    fn eval_range(&self) -> usize {
        self.inner.eval_range()
    }
    fn dim(&self, n: usize) -> usize {
        self.inner.dim(n).unwrap_or(0)
    }
    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError> {
        Ok(self.inner.generator(n, i as i64)?.scale(&self.y))
    }
    fn inverse_generator(&self, n: usize, i: usize) -> Option<Result<PolyMatrix, RepError>> {
        Some(self.inner.generator(n, -(i as i64)).map(|m| m.scale(&self.y_inv)))
    }
    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        self.inner.stab(n, n_prime)
    }
    fn split(&self, n: usize, n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        self.inner.split(n, n_prime)
    }
}

/// `y𝔛 ⊗ F`: every generator matrix multiplied by the unit `y`, stabilizations
/// unchanged.
pub fn scalar_twist(y: &LaurentPoly, f: &BraidFunctor) -> Result<BraidFunctor, RepError> {
    let y_inv = y.inverse().map_err(|_| RepError::NotUnit(y.to_string()))?;
    Ok(BraidFunctor::new(ScalarTwist { y: y.clone(), y_inv, inner: f.clone() }))
}

struct Translation {
    k: usize,
    inner: BraidFunctor,
}

impl Translation {
    /// `id_k ♮ [n′−n, id_{n′}]` as a morphism `k + n → k + n′`.
    fn shifted_stabilization(&self, n: usize, n_prime: usize) -> Result<UBetaMorphism, RepError> {
        Ok(ubeta_monoidal(&UBetaMorphism::identity(self.k), &UBetaMorphism::stabilization(n, n_prime)?))
    }
}

impl FunctorRules for Translation {
    fn name(&self) -> String {
        format!("tau({}; {})", self.k, self.inner.name())
    }
    fn eval_range(&self) -> usize {
        self.inner.eval_range().saturating_sub(self.k)
    }
    fn dim(&self, n: usize) -> usize {
        self.inner.dim(self.k + n).unwrap_or(0)
    }
    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError> {
        self.inner.generator(self.k + n, (self.k + i) as i64)
    }
    fn inverse_generator(&self, n: usize, i: usize) -> Option<Result<PolyMatrix, RepError>> {
        Some(self.inner.generator(self.k + n, -((self.k + i) as i64)))
    }
    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        self.inner.functor_eval(&self.shifted_stabilization(n, n_prime)?)
    }
    fn split(&self, n: usize, n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        // stab = F(β)·F.stab with β = b_{k,n′−n}^{-1} ♮ id_n, so
        // F.split · F(β^{-1}) is a retraction.
        let r = self.inner.split(self.k + n, self.k + n_prime)?;
        Some((|| {
            let beta = self.shifted_stabilization(n, n_prime)?;
            Ok(r?.mul(&self.inner.braid_matrix(&beta.word().inverse())?)?)
        })())
    }
}

/// `τ_k F = F(k ♮ −)`: levels shift by `k`, generators by `id_k ♮ −`, and
/// stabilizations are `F(id_k ♮ [n′−n, id])`.
pub fn translation(k: usize, f: &BraidFunctor) -> BraidFunctor {
    if k == 0 {
        return f.clone();
    }
    BraidFunctor::new(Translation { k, inner: f.clone() })
}

struct Zero(usize);

impl FunctorRules for Zero {
    fn name(&self) -> String {
        "zero".into()
    }
    fn eval_range(&self) -> usize {
        self.0
    }
    fn dim(&self, _n: usize) -> usize {
        0
    }
    fn generator(&self, _n: usize, _i: usize) -> Result<PolyMatrix, RepError> {
        Ok(PolyMatrix::zeros(0, 0))
    }
    fn inverse_generator(&self, _n: usize, _i: usize) -> Option<Result<PolyMatrix, RepError>> {
        Some(Ok(PolyMatrix::zeros(0, 0)))
    }
    fn stab(&self, _n: usize, _n_prime: usize) -> Result<PolyMatrix, RepError> {
        Ok(PolyMatrix::zeros(0, 0))
    }
    fn split(&self, _n: usize, _n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        Some(Ok(PolyMatrix::zeros(0, 0)))
    }
}

/// The zero functor.
pub fn zero(range: usize) -> BraidFunctor {
    BraidFunctor::new(Zero(range))
}

struct Corrupted {
    inner: BraidFunctor,
    level: usize,
    generator: usize,
    row: usize,
    col: usize,
}

impl FunctorRules for Corrupted {
    fn name(&self) -> String {
        format!("corrupted({})", self.inner.name())
    }
    fn eval_range(&self) -> usize {
        self.inner.eval_range()
    }
    fn dim(&self, n: usize) -> usize {
        self.inner.dim(n).unwrap_or(0)
    }
    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError> {
        let mut m = self.inner.generator(n, i as i64)?;
        if (n, i) == (self.level, self.generator) {
            let v = -m.get(self.row, self.col);
            m.set(self.row, self.col, v);
        }
        Ok(m)
    }
    fn inverse_generator(&self, n: usize, i: usize) -> Option<Result<PolyMatrix, RepError>> {
        if (n, i) == (self.level, self.generator) {
            None
        } else {
            Some(self.inner.generator(n, -(i as i64)))
        }
    }
    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        self.inner.stab(n, n_prime)
    }
    fn split(&self, n: usize, n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        self.inner.split(n, n_prime)
    }
}

/// `F` with the sign of entry `(row, col)` of `F(σ_i)` at one level
/// flipped (its inverse is recomputed exactly). Used as a negative control.
pub fn corrupt_entry(f: &BraidFunctor, level: usize, generator: usize, row: usize, col: usize) -> BraidFunctor {
    BraidFunctor::new(Corrupted { inner: f.clone(), level, generator, row, col })
}
