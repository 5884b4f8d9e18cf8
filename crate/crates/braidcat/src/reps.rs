//! Symbolic generator matrices of the unreduced Burau and Lawrence–Krammer
//! representations, in the column convention.

use lmkit_laurent::{LaurentPoly, PolyMatrix};

use crate::error::BraidError;

fn check(n: usize, letter: i64) -> Result<usize, BraidError> {
    let i = letter.unsigned_abs() as usize;
    if letter == 0 || i >= n {
        return Err(BraidError::LetterOutOfRange { letter, strands: n });
    }
    Ok(i)
}

/// The unreduced Burau matrix `Id_{i−1} ⊕ B(s) ⊕ Id_{n−i−1}` of `σ_i^{±1}`,
/// with `B(s) = [[1−s, s], [1, 0]]` and inverse block
/// `[[0, 1], [s^{-1}, 1−s^{-1}]]`. `s` must be a unit.
pub fn burau_generator(n: usize, letter: i64, s: &LaurentPoly) -> Result<PolyMatrix, BraidError> {
    let i = check(n, letter)?;
    let one = LaurentPoly::one();
    let block = if letter > 0 {
        [[&one - s, s.clone()], [one.clone(), LaurentPoly::zero()]]
    } else {
        let si = s.inverse().map_err(|_| BraidError::InvalidMorphism(format!("Burau parameter {s} is not a unit")))?;
        [[LaurentPoly::zero(), one.clone()], [si.clone(), &one - &si]]
    };
    let mut m = PolyMatrix::identity(n);
    for (r, row) in block.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            m.set(i - 1 + r, i - 1 + c, v.clone());
        }
    }
    Ok(m)
}

/// Number of Lawrence–Krammer basis vectors `v_{j,k}`, `1 ≤ j < k ≤ n`.
pub fn lk_dim(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `v_{j,k}` (1-based, `j < k ≤ n`) in lexicographic order.
pub fn lk_index(n: usize, j: usize, k: usize) -> usize {
    debug_assert!(1 <= j && j < k && k <= n);
    (j - 1) * n - (j - 1) * j / 2 + (k - j - 1)
}

/// The image of `v_{j,k}` under `σ_i` as `(j′, k′, coefficient)` triples.
pub fn lk_image(i: usize, j: usize, k: usize) -> Vec<(usize, usize, LaurentPoly)> {
    let t = LaurentPoly::t;
    let one = LaurentPoly::one;
    let t2_minus_t = || &LaurentPoly::t_pow(2) - &t();
    if i == j && i + 1 == k {
        vec![(i, i + 1, -(&LaurentPoly::q() * &LaurentPoly::t_pow(2)))]
    } else if i + 1 == j {
        vec![(i, k, t()), (i, i + 1, t2_minus_t()), (i + 1, k, &one() - &t())]
    } else if i == j {
        vec![(i + 1, k, one())]
    } else if i + 1 == k {
        vec![(j, i, t()), (j, i + 1, &one() - &t()), (i, i + 1, -(&t2_minus_t() * &LaurentPoly::q()))]
    } else if i == k {
        vec![(j, i + 1, one())]
    } else {
        vec![(j, k, one())]
    }
}

/// The Lawrence–Krammer matrix of `σ_i` (positive letters only; inverses
/// are obtained by exact inversion where needed).
pub fn lk_generator(n: usize, i: usize) -> Result<PolyMatrix, BraidError> {
    check(n, i as i64)?;
    let d = lk_dim(n);
    let mut m = PolyMatrix::zeros(d, d);
    for j in 1..=n {
        for k in j + 1..=n {
            let col = lk_index(n, j, k);
            for (a, b, c) in lk_image(i, j, k) {
                let row = lk_index(n, a, b);
                let v = m.get(row, col) + &c;
                m.set(row, col, v);
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn burau_block_and_inverse() {
        let t = LaurentPoly::t();
        let b = burau_generator(2, 1, &t).unwrap();
        assert_eq!(b.to_string_rows(), vec![vec!["1 - t", "t"], vec!["1", "0"]]);
        let bi = burau_generator(2, -1, &t).unwrap();
        assert!(b.mul(&bi).unwrap().is_identity());
        assert!(burau_generator(2, 2, &t).is_err());
        assert!(burau_generator(2, -1, &lp("1 + t")).is_err());
    }

    #[test]
    fn lk_indexing_is_lexicographic() {
        let mut expected = 0;
        for j in 1..=5 {
            for k in j + 1..=5 {
                assert_eq!(lk_index(5, j, k), expected);
                expected += 1;
            }
        }
        assert_eq!(lk_dim(5), expected);
        assert_eq!(lk_dim(4), 6);
        assert_eq!(lk_dim(1), 0);
        assert_eq!(lk_dim(0), 0);
    }

    #[test]
    fn lk_eigenvector_case() {
        let m = lk_generator(4, 2).unwrap();
        let c = lk_index(4, 2, 3);
        assert_eq!(m.get(c, c), &lp("-1*t^2*q"));
        for r in 0..6 {
            if r != c {
                assert!(m.get(r, c).is_zero());
            }
        }
    }

    #[test]
    fn lk_braid_relation_in_b3() {
        let a = lk_generator(3, 1).unwrap();
        let b = lk_generator(3, 2).unwrap();
        let aba = a.mul(&b).unwrap().mul(&a).unwrap();
        let bab = b.mul(&a).unwrap().mul(&b).unwrap();
        assert_eq!(aba, bab);
        assert!(!a.mul(&b).unwrap().eq(&b.mul(&a).unwrap()));
    }
}
