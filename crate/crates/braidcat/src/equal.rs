//! Braid-word equality by evaluation in faithful representations.
//!
//! Two words are declared equal when their unreduced Burau matrices agree
//! symbolically over `ℤ[t^{±1}]` and their Lawrence–Krammer matrices agree at
//! every seeded point `(t, q)` modulo the prime `p = 2^61 − 1`. The
//! Lawrence–Krammer representation is faithful, so equal braids always pass;
//! distinct braids pass only if every sampled point is a root of some nonzero
//! entry difference, which has probability at most `(deg/p)^points`.
//! A negative answer always carries a concrete witness.

use std::collections::BTreeMap;
use std::fmt;

use lmkit_laurent::LaurentPoly;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::BraidError;
use crate::reps::{lk_dim, lk_generator};
use crate::word::BraidWord;

/// The Mersenne prime `2^61 − 1` used for Lawrence–Krammer evaluation.
pub const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    // Mersenne reduction: 2^61 ≡ 1 (mod p).
    let x = a as u128 * b as u128;
    let folded = (x as u64 & MODULUS) + (x >> 61) as u64;
    let folded = (folded & MODULUS) + (folded >> 61);
    if folded >= MODULUS {
        folded - MODULUS
    } else {
        folded
    }
}

fn add_mod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

fn pow_mod(mut base: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, MODULUS - 2)
}

fn bigint_mod(x: &num_bigint::BigInt) -> u64 {
    x.mod_floor(&num_bigint::BigInt::from(MODULUS)).to_u64().expect("reduced below p")
}

/// Evaluates a Laurent polynomial modulo `p` at `(t, q)` (both nonzero).
pub fn eval_mod_p(x: &LaurentPoly, t: u64, q: u64) -> u64 {
    let (ti, qi) = (inv_mod(t), inv_mod(q));
    let mut acc = 0;
    for ((a, b), c) in x.terms() {
        let num = bigint_mod(c.numer());
        let den = bigint_mod(c.denom());
        let mut v = mul_mod(num, inv_mod(den));
        v = mul_mod(v, pow_mod(if *a >= 0 { t } else { ti }, a.unsigned_abs() as u64));
        v = mul_mod(v, pow_mod(if *b >= 0 { q } else { qi }, b.unsigned_abs() as u64));
        acc = add_mod(acc, v);
    }
    acc
}

/// Inverse of a square matrix modulo `p` by Gauss–Jordan; `None` if singular.
fn invert_mod(m: &[u64], d: usize) -> Option<Vec<u64>> {
    let w = 2 * d;
    let mut a = vec![0u64; d * w];
    for r in 0..d {
        a[r * w..r * w + d].copy_from_slice(&m[r * d..(r + 1) * d]);
        a[r * w + d + r] = 1;
    }
    for k in 0..d {
        let p = (k..d).find(|&r| a[r * w + k] != 0)?;
        if p != k {
            for c in 0..w {
                a.swap(p * w + c, k * w + c);
            }
        }
        let pinv = inv_mod(a[k * w + k]);
        for c in 0..w {
            a[k * w + c] = mul_mod(a[k * w + c], pinv);
        }
        for r in 0..d {
            let f = a[r * w + k];
            if r == k || f == 0 {
                continue;
            }
            for c in 0..w {
                let delta = mul_mod(f, a[k * w + c]);
                a[r * w + c] = add_mod(a[r * w + c], MODULUS - delta);
            }
        }
    }
    Some((0..d).flat_map(|r| a[r * w + d..r * w + w].to_vec()).collect())
}

/// Sparse columns of a generator matrix: for each column, `(row, value)`.
type SparseColumns = Vec<Vec<(usize, u64)>>;

/// Reusable Lawrence–Krammer evaluator for one strand count and a fixed set
/// of seeded points (generator matrices are built once).
#[derive(Clone, Debug)]
pub struct BraidOracle {
    strands: usize,
    points: Vec<(u64, u64)>,
    /// `gens[point][letter index]`, letters ordered `1, −1, 2, −2, …`.
    gens: Vec<Vec<SparseColumns>>,
}

fn letter_slot(letter: i64) -> usize {
    2 * (letter.unsigned_abs() as usize - 1) + usize::from(letter < 0)
}

/// Draws `count` reproducible points `(t, q)` with `2 ≤ t, q ≤ p − 2`.
pub fn seeded_mod_p_points(seed: u64, count: usize) -> Vec<(u64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (rng.gen_range(2..MODULUS - 1), rng.gen_range(2..MODULUS - 1))).collect()
}

impl BraidOracle {
    /// Builds the evaluator on `strands` strands at `certainty` points drawn
    /// from `seed`.
    pub fn new(strands: usize, certainty: usize, seed: u64) -> Self {
        let points = seeded_mod_p_points(seed, certainty);
        let d = lk_dim(strands);
        let gens = points
            .iter()
            .map(|&(t, q)| {
                let mut per = Vec::new();
                for i in 1..strands {
                    let g = lk_generator(strands, i).expect("in range");
                    let dense: Vec<u64> = (0..d * d).map(|idx| eval_mod_p(g.get(idx / d, idx % d), t, q)).collect();
                    let inv = invert_mod(&dense, d).expect("Lawrence–Krammer generators are invertible");
                    per.push(to_sparse(&dense, d));
                    per.push(to_sparse(&inv, d));
                }
                per
            })
            .collect();
        Self { strands, points, gens }
    }

    /// Strand count.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The evaluation points.
    pub fn points(&self) -> &[(u64, u64)] {
        &self.points
    }

    /// Row-major Lawrence–Krammer matrix of `w` at point `k`, modulo `p`.
    pub fn evaluate(&self, w: &BraidWord, k: usize) -> Vec<u64> {
        let d = lk_dim(self.strands);
        let mut m = vec![0u64; d * d];
        for r in 0..d {
            m[r * d + r] = 1;
        }
        for &l in w.letters() {
            let g = &self.gens[k][letter_slot(l)];
            let mut out = vec![0u64; d * d];
            for (c, col) in g.iter().enumerate() {
                for &(j, v) in col {
                    for r in 0..d {
                        let x = m[r * d + j];
                        if x != 0 {
                            out[r * d + c] = add_mod(out[r * d + c], mul_mod(x, v));
                        }
                    }
                }
            }
            m = out;
        }
        m
    }

    /// Decides `u = v` (both on `strands` strands).
    pub fn equal(&self, u: &BraidWord, v: &BraidWord) -> Result<BraidEquality, BraidError> {
        for w in [u, v] {
            if w.strands() != self.strands {
                return Err(BraidError::StrandMismatch(w.strands(), self.strands));
            }
        }
        if u == v {
            return Ok(BraidEquality::equal());
        }
        let bu = burau_symbolic(u)?;
        let bv = burau_symbolic(v)?;
        if let Some(idx) = (0..bu.len()).find(|&i| bu[i] != bv[i]) {
            let n = self.strands;
            return Ok(BraidEquality::differ(Witness::Burau {
                row: idx / n,
                col: idx % n,
                left: bu[idx].to_string(),
                right: bv[idx].to_string(),
            }));
        }
        let d = lk_dim(self.strands);
        for (k, &(t, q)) in self.points.iter().enumerate() {
            let mu = self.evaluate(u, k);
            let mv = self.evaluate(v, k);
            if let Some(idx) = (0..mu.len()).find(|&i| mu[i] != mv[i]) {
                return Ok(BraidEquality::differ(Witness::LawrenceKrammer {
                    t,
                    q,
                    row: idx / d,
                    col: idx % d,
                    left: mu[idx],
                    right: mv[idx],
                }));
            }
        }
        Ok(BraidEquality::equal())
    }
}

fn to_sparse(m: &[u64], d: usize) -> SparseColumns {
    (0..d).map(|c| (0..d).filter(|&r| m[r * d + c] != 0).map(|r| (r, m[r * d + c])).collect()).collect()
}

/// Outcome of a braid-word comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidEquality {
    /// Verdict.
    pub equal: bool,
    /// Present exactly when `equal` is false.
    pub witness: Option<Witness>,
}

impl BraidEquality {
    fn equal() -> Self {
        Self { equal: true, witness: None }
    }

    fn differ(w: Witness) -> Self {
        Self { equal: false, witness: Some(w) }
    }
}

/// A concrete certificate that two braid words differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Burau matrices differ at `(row, col)`.
    Burau { row: usize, col: usize, left: String, right: String },
    /// Lawrence–Krammer matrices modulo `p` differ at `(t, q)`, `(row, col)`.
    LawrenceKrammer { t: u64, q: u64, row: usize, col: usize, left: u64, right: u64 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Burau { row, col, left, right } => {
                write!(f, "Burau entry ({row}, {col}): {left} vs {right}")
            }
            Witness::LawrenceKrammer { t, q, row, col, left, right } => {
                write!(f, "Lawrence–Krammer entry ({row}, {col}) at t = {t}, q = {q} mod p: {left} vs {right}")
            }
        }
    }
}

/// Decides whether two braid words represent the same braid, using
/// `certainty` seeded Lawrence–Krammer points plus symbolic Burau.
pub fn braid_equal(u: &BraidWord, v: &BraidWord, certainty: usize, seed: u64) -> Result<BraidEquality, BraidError> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch(u.strands(), v.strands()));
    }
    BraidOracle::new(u.strands(), certainty, seed).equal(u, v)
}

/// A Laurent polynomial in `t` with `i128` coefficients (overflow is an
/// error), used for fast symbolic Burau products.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZLaurent(BTreeMap<i32, i128>);

impl ZLaurent {
    fn constant(c: i128) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(0, c);
        }
        Self(m)
    }

    fn axpy(&mut self, other: &ZLaurent, scale: i128, shift: i32) -> Result<(), BraidError> {
        for (&e, &c) in &other.0 {
            let term = c.checked_mul(scale).ok_or(BraidError::Overflow)?;
            let slot = self.0.entry(e + shift).or_insert(0);
            *slot = slot.checked_add(term).ok_or(BraidError::Overflow)?;
            if *slot == 0 {
                self.0.remove(&(e + shift));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = LaurentPoly::from_terms(
            self.0.iter().map(|(&e, &c)| ((e, 0), lmkit_laurent::Rational::from_integer(num_bigint::BigInt::from(c)))),
        );
        write!(f, "{poly}")
    }
}

/// Row-major unreduced Burau matrix of `w` over `ℤ[t^{±1}]`, computed by
/// right multiplication with the generator column operations.
pub fn burau_symbolic(w: &BraidWord) -> Result<Vec<ZLaurent>, BraidError> {
    let n = w.strands();
    let mut m: Vec<ZLaurent> = (0..n * n).map(|i| ZLaurent::constant(i128::from(i / n == i % n))).collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        for r in 0..n {
            let a = m[r * n + i].clone();
            let b = m[r * n + i + 1].clone();
            let (mut ci, mut cj) = (ZLaurent::default(), ZLaurent::default());
            if l > 0 {
                // col_i ← (1 − t)·col_i + col_{i+1}, col_{i+1} ← t·col_i
                ci.axpy(&a, 1, 0)?;
                ci.axpy(&a, -1, 1)?;
                ci.axpy(&b, 1, 0)?;
                cj.axpy(&a, 1, 1)?;
            } else {
                // col_i ← t^{-1}·col_{i+1}, col_{i+1} ← col_i + (1 − t^{-1})·col_{i+1}
                ci.axpy(&b, 1, -1)?;
                cj.axpy(&a, 1, 0)?;
                cj.axpy(&b, 1, 0)?;
                cj.axpy(&b, -1, -1)?;
            }
            m[r * n + i] = ci;
            m[r * n + i + 1] = cj;
        }
    }
    Ok(m)
}
