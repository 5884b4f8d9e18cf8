//! Braid words in the Artin generators.

use std::fmt;

use crate::error::BraidError;

/// A word in the Artin generators of `B_n`.
///
/// Letters are stored as written: the word `[a, b, c]` is the product
/// `σ_a σ_b σ_c`, which as a composite of maps applies `σ_c` first
/// (composition reads right to left). A negative letter `−i` is `σ_i^{-1}`.
/// Adjacent inverse letters are cancelled eagerly; no other rewriting is done.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    /// The empty word `id_n`.
    pub fn identity(strands: usize) -> Self {
        Self { strands, letters: Vec::new() }
    }

    /// Builds a word, checking letter bounds and cancelling adjacent inverses.
    pub fn new(strands: usize, letters: &[i64]) -> Result<Self, BraidError> {
        let mut out = Self::identity(strands);
        for &l in letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: l, strands });
            }
            out.push(l);
        }
        Ok(out)
    }

    /// The single generator `σ_i^{±1}` (signed index).
    pub fn generator(strands: usize, letter: i64) -> Result<Self, BraidError> {
        Self::new(strands, &[letter])
    }

    fn push(&mut self, l: i64) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Letters in written order.
    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum (writhe).
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// The composite `self ∘ other` (apply `other` first): concatenation.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        Ok(out)
    }

    /// The inverse word.
    pub fn inverse(&self) -> BraidWord {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Integer power.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base).expect("same strands");
        }
        out
    }

    /// The monoidal product `self ♮ other`: `other`'s letters are shifted by
    /// `self.strands()`.
    pub fn monoidal(&self, other: &BraidWord) -> BraidWord {
        let shift = self.strands as i64;
        let mut out = Self { strands: self.strands + other.strands, letters: self.letters.clone() };
        for &l in &other.letters {
            out.push(l + l.signum() * shift);
        }
        out
    }

    /// `id_k ♮ self`.
    pub fn shift_right(&self, k: usize) -> BraidWord {
        BraidWord::identity(k).monoidal(self)
    }

    /// `self ♮ id_k`.
    pub fn extend(&self, k: usize) -> BraidWord {
        self.monoidal(&BraidWord::identity(k))
    }

    /// Parses `"s1 s2^-1 s1"` (or `"e"`/empty for the identity).
    pub fn parse(strands: usize, s: &str) -> Result<Self, BraidError> {
        let err = || BraidError::Parse(s.to_string());
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let body = tok.strip_prefix('s').ok_or_else(err)?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| err())?),
                None => (body, 1),
            };
            let idx: i64 = idx.parse().map_err(|_| err())?;
            if idx <= 0 {
                return Err(err());
            }
            for _ in 0..exp.unsigned_abs() {
                letters.push(idx * exp.signum());
            }
        }
        Self::new(strands, &letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|&l| if l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) }).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The braiding `b_{n,m}` on `n + m` strands:
/// `(σ_m ∘ ⋯ ∘ σ_1) ∘ ⋯ ∘ (σ_{n+m−1} ∘ ⋯ ∘ σ_n)`.
///
/// `b_{1,1} = σ_1`, `b_{1,2} = σ_2 σ_1` (letters `[2, 1]`), `b_{2,1} = σ_1 σ_2`.
pub fn braiding(n: usize, m: usize) -> BraidWord {
    let mut letters = Vec::new();
    for k in 1..=n {
        for l in (k..k + m).rev() {
            letters.push(l as i64);
        }
    }
    BraidWord::new(n + m, &letters).expect("letters within n + m − 1")
}

/// The half twist `Δ_n = (σ_1)(σ_2 σ_1)⋯(σ_{n−1}⋯σ_1)`, which conjugates
/// `σ_i` to `σ_{n−i}`.
pub fn half_twist(n: usize) -> BraidWord {
    let mut letters = Vec::new();
    for k in 1..n {
        for l in (1..=k).rev() {
            letters.push(l as i64);
        }
    }
    BraidWord::new(n, &letters).expect("letters within n − 1")
}

/// All freely reduced words of length `≤ max_len` in the generators of `B_n`,
/// in length-lexicographic order (letters ordered `1, −1, 2, −2, …`).
pub fn words_up_to(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i64> = (1..strands as i64).flat_map(|i| [i, -i]).collect();
    let mut out = vec![BraidWord::identity(strands)];
    let mut frontier = vec![BraidWord::identity(strands)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &alphabet {
                if w.letters.last() == Some(&-l) {
                    continue;
                }
                let mut x = w.clone();
                x.letters.push(l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_cancels_inverses() {
        let s1 = BraidWord::generator(3, 1).unwrap();
        assert!(s1.compose(&s1.inverse()).unwrap().is_empty());
        assert!(s1.compose(&BraidWord::identity(4)).is_err());
    }

    #[test]
    fn monoidal_shifts_right_factor() {
        let s = BraidWord::generator(3, 2).unwrap();
        assert_eq!(s.shift_right(1).letters(), &[3]);
        assert_eq!(s.shift_right(1).strands(), 4);
        assert_eq!(BraidWord::identity(0).monoidal(&s), s);
        assert_eq!(s.extend(2).letters(), &[2]);
    }

    #[test]
    fn braiding_formula() {
        assert_eq!(braiding(1, 1).letters(), &[1]);
        assert_eq!(braiding(1, 2).letters(), &[2, 1]);
        assert_eq!(braiding(2, 1).letters(), &[1, 2]);
        assert_eq!(braiding(2, 2).letters(), &[2, 1, 3, 2]);
        assert!(braiding(0, 3).is_empty());
        assert!(braiding(3, 0).is_empty());
        assert_eq!(braiding(3, 0).strands(), 3);
    }

    #[test]
    fn text_round_trip() {
        let w = BraidWord::parse(4, "s1 s2^-1 s3").unwrap();
        assert_eq!(w.letters(), &[1, -2, 3]);
        assert_eq!(w.to_string(), "s1 s2^-1 s3");
        assert_eq!(BraidWord::parse(4, &w.to_string()).unwrap(), w);
        assert_eq!(BraidWord::parse(3, "s1^2").unwrap().letters(), &[1, 1]);
        assert_eq!(BraidWord::parse(3, "e").unwrap(), BraidWord::identity(3));
        assert!(BraidWord::parse(3, "s3").is_err());
        assert!(BraidWord::parse(3, "x1").is_err());
    }

    #[test]
    fn small_groups_only_admit_empty_word() {
        assert!(BraidWord::new(1, &[1]).is_err());
        assert!(BraidWord::new(0, &[]).unwrap().is_empty());
    }

    #[test]
    fn word_enumeration_counts() {
        // 1 + 4 + 4·3 reduced words of length ≤ 2 in B_3.
        assert_eq!(words_up_to(3, 2).len(), 17);
        assert_eq!(words_up_to(1, 3).len(), 1);
    }

    #[test]
    fn half_twist_shape() {
        assert_eq!(half_twist(3).letters(), &[1, 2, 1]);
        assert_eq!(half_twist(1).len(), 0);
    }
}
