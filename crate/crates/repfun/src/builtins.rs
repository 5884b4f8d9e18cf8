//! The built-in functors: constant, Burau, reduced Burau, Tong–Yang–Ma,
//! Lawrence–Krammer, atomic, `T₁` and `E_l`.
//!
//! Every stabilization is the embedding onto the last coordinates, and the
//! declared retraction is the corresponding coordinate projection.

use lmkit_braidcat::{burau_generator, lk_dim, lk_generator};
use lmkit_laurent::{LaurentPoly, PolyMatrix};

use crate::error::RepError;
use crate::functor::{last_coordinates, BraidFunctor, FunctorRules};

/// The built-in functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// The constant functor: `𝕂` at every level, all maps identities.
    Constant,
    /// Unreduced Burau with parameter `s` (a unit): dim `n`.
    Burau(LaurentPoly),
    /// Reduced Burau in `t`: dim `max(n − 1, 0)`.
    ReducedBurau,
    /// Tong–Yang–Ma with parameter `s` (a unit): dim `n`, block `[[0, s], [1, 0]]`.
    Tym(LaurentPoly),
    /// Lawrence–Krammer in `t, q`: dim `n(n−1)/2`.
    LawrenceKrammer,
    /// The atomic functor concentrated at level `k`.
    Atomic(usize),
    /// The subfunctor `T₁` of the constant functor: zero at level 0.
    T1,
    /// `E_l(n) = 𝕂^{n^l}` with trivial braid action.
    E(usize),
}

impl Builtin {
    /// Looks up a built-in by name and textual parameters:
    /// `constant`, `burau[(s)]`, `reduced-burau`, `tym[(s)]`, `lk`,
    /// `atomic(k)`, `t1`, `e(l)`. Burau and TYM default to `s = t`.
    pub fn parse(name: &str, params: &[&str]) -> Result<Self, RepError> {
        let unknown = || RepError::UnknownFunctor(format!("{name}({})", params.join(",")));
        let unit = |p: &str| -> Result<LaurentPoly, RepError> {
            let s: LaurentPoly = p.trim().parse()?;
            if !s.is_unit() {
                return Err(RepError::NotUnit(s.to_string()));
            }
            Ok(s)
        };
        let int = |p: &str| p.trim().parse::<usize>().map_err(|_| unknown());
        match (name, params) {
            ("constant", []) => Ok(Builtin::Constant),
            ("burau", []) => Ok(Builtin::Burau(LaurentPoly::t())),
            ("burau", [s]) => Ok(Builtin::Burau(unit(s)?)),
            ("reduced-burau" | "reduced_burau", []) => Ok(Builtin::ReducedBurau),
            ("tym", []) => Ok(Builtin::Tym(LaurentPoly::t())),
            ("tym", [s]) => Ok(Builtin::Tym(unit(s)?)),
            ("lk" | "lawrence-krammer", []) => Ok(Builtin::LawrenceKrammer),
            ("atomic", [k]) => Ok(Builtin::Atomic(int(k)?)),
            ("t1", []) => Ok(Builtin::T1),
            ("e", [l]) => Ok(Builtin::E(int(l)?)),
            _ => Err(unknown()),
        }
    }

    /// The functor, defined on levels `0..=range`.
    pub fn functor(&self, range: usize) -> BraidFunctor {
        BraidFunctor::new(BuiltinRules { kind: self.clone(), range })
    }

    fn name(&self) -> String {
        match self {
            Builtin::Constant => "constant".into(),
            Builtin::Burau(s) => format!("burau({s})"),
            Builtin::ReducedBurau => "reduced-burau".into(),
            Builtin::Tym(s) => format!("tym({s})"),
            Builtin::LawrenceKrammer => "lk".into(),
            Builtin::Atomic(k) => format!("atomic({k})"),
            Builtin::T1 => "t1".into(),
            Builtin::E(l) => format!("e({l})"),
        }
    }
}

struct BuiltinRules {
    kind: Builtin,
    range: usize,
}

fn block_at(n: usize, start: usize, block: &[&[LaurentPoly]]) -> PolyMatrix {
    let mut m = PolyMatrix::identity(n);
    for (r, row) in block.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            m.set(start + r, start + c, v.clone());
        }
    }
    m
}

/// Reduced Burau generators in column convention (the transpose of the
/// usual row-convention display); this orientation is the one compatible
/// with the last-coordinates stabilization.
fn reduced_burau(n: usize, i: usize) -> PolyMatrix {
    let t = LaurentPoly::t();
    let (zero, one, mt) = (LaurentPoly::zero(), LaurentPoly::one(), -&t);
    if n == 2 {
        return PolyMatrix::scalar(1, &mt);
    }
    if i == 1 {
        block_at(n - 1, 0, &[&[mt, one.clone()], &[zero, one]])
    } else if i == n - 1 {
        block_at(n - 1, n - 3, &[&[one, zero], &[t, mt]])
    } else {
        block_at(
            n - 1,
            i - 2,
            &[&[one.clone(), zero.clone(), zero.clone()], &[t, mt, one.clone()], &[zero.clone(), zero, one]],
        )
    }
}

impl FunctorRules for BuiltinRules {
    fn name(&self) -> String {
        self.kind.name()
    }

    fn eval_range(&self) -> usize {
        self.range
    }

    fn dim(&self, n: usize) -> usize {
        match &self.kind {
            Builtin::Constant => 1,
            Builtin::Burau(_) | Builtin::Tym(_) => n,
            Builtin::ReducedBurau => n.saturating_sub(1),
            Builtin::LawrenceKrammer => lk_dim(n),
            Builtin::Atomic(k) => usize::from(n == *k),
            Builtin::T1 => usize::from(n > 0),
            Builtin::E(l) => n.pow(*l as u32),
        }
    }

    fn generator(&self, n: usize, i: usize) -> Result<PolyMatrix, RepError> {
        Ok(match &self.kind {
            Builtin::Burau(s) => burau_generator(n, i as i64, s)?,
            Builtin::Tym(s) => {
                block_at(n, i - 1, &[&[LaurentPoly::zero(), s.clone()], &[LaurentPoly::one(), LaurentPoly::zero()]])
            }
            Builtin::ReducedBurau => reduced_burau(n, i),
            Builtin::LawrenceKrammer => lk_generator(n, i)?,
            _ => PolyMatrix::identity(self.dim(n)),
        })
    }

    fn inverse_generator(&self, n: usize, i: usize) -> Option<Result<PolyMatrix, RepError>> {
        match &self.kind {
            Builtin::Burau(s) => Some(burau_generator(n, -(i as i64), s).map_err(RepError::from)),
            Builtin::Tym(s) => Some(
                s.inverse()
                    .map(|si| {
                        block_at(n, i - 1, &[&[LaurentPoly::zero(), LaurentPoly::one()], &[si, LaurentPoly::zero()]])
                    })
                    .map_err(|_| RepError::NotUnit(s.to_string())),
            ),
            Builtin::ReducedBurau | Builtin::LawrenceKrammer => None,
            _ => Some(Ok(PolyMatrix::identity(self.dim(n)))),
        }
    }

    fn stab(&self, n: usize, n_prime: usize) -> Result<PolyMatrix, RepError> {
        let (big, small) = (self.dim(n_prime), self.dim(n));
        Ok(match &self.kind {
            // Distinct levels: the atomic functor's transition maps vanish.
            Builtin::Atomic(_) => PolyMatrix::zeros(big, small),
            _ => last_coordinates(big, small),
        })
    }

    fn split(&self, n: usize, n_prime: usize) -> Option<Result<PolyMatrix, RepError>> {
        match &self.kind {
            Builtin::Atomic(_) => None,
            _ => Some(Ok(last_coordinates(self.dim(n_prime), self.dim(n)).transpose())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        let bur = Builtin::Burau(LaurentPoly::t()).functor(6);
        let red = Builtin::ReducedBurau.functor(6);
        let lk = Builtin::LawrenceKrammer.functor(6);
        assert_eq!((bur.dim(4).unwrap(), red.dim(4).unwrap(), lk.dim(4).unwrap()), (4, 3, 6));
        assert_eq!(red.dim(0).unwrap(), 0);
        let a = Builtin::Atomic(2).functor(6);
        assert_eq!((0..5).map(|m| a.dim(m).unwrap()).collect::<Vec<_>>(), vec![0, 0, 1, 0, 0]);
        let e = Builtin::E(2).functor(6);
        assert_eq!(e.dim(3).unwrap(), 9);
        assert_eq!(Builtin::E(0).functor(3).dim(0).unwrap(), 1);
        assert_eq!(Builtin::T1.functor(3).dim(0).unwrap(), 0);
    }

    #[test]
    fn burau_lower_right_block() {
        let bur = Builtin::Burau(LaurentPoly::t()).functor(4);
        let m = bur.generator(3, 2).unwrap();
        let expected = PolyMatrix::identity(1)
            .direct_sum(&PolyMatrix::from_rows(vec![vec![lp("1 - t"), lp("t")], vec![lp("1"), lp("0")]], 2).unwrap());
        assert_eq!(m, expected);
    }

    #[test]
    fn lk_eigenvalue() {
        let lk = Builtin::LawrenceKrammer.functor(5);
        let m = lk.generator(5, 3).unwrap();
        let c = lmkit_braidcat::lk_index(5, 3, 4);
        assert_eq!(m.get(c, c), &lp("-1*t^2*q"));
    }

    #[test]
    fn atomic_stabilizations_vanish() {
        let a = Builtin::Atomic(1).functor(4);
        assert!(a.stab(1, 2).unwrap().is_zero());
        assert_eq!(a.stab(1, 2).unwrap().rows(), 0);
        assert_eq!(a.stab(0, 1).unwrap().rows(), 1);
        assert!(a.stab(0, 1).unwrap().is_zero());
        assert!(a.stab(1, 1).unwrap().is_identity());
        assert!(a.split(1, 2).is_none());
    }

    #[test]
    fn tym_stab_is_last_coordinates() {
        let f = Builtin::Tym(LaurentPoly::t()).functor(4);
        let s = f.stab(2, 3).unwrap();
        assert_eq!(s, last_coordinates(3, 2));
        let r = f.split(2, 3).unwrap().unwrap();
        assert!(r.mul(&s).unwrap().is_identity());
    }

    #[test]
    fn parsing() {
        assert_eq!(Builtin::parse("burau", &["t^2"]).unwrap(), Builtin::Burau(lp("t^2")));
        assert_eq!(Builtin::parse("tym", &["-1"]).unwrap(), Builtin::Tym(lp("-1")));
        assert_eq!(Builtin::parse("atomic", &["3"]).unwrap(), Builtin::Atomic(3));
        assert!(matches!(Builtin::parse("burau", &["1 + t"]), Err(RepError::NotUnit(_))));
        assert!(matches!(Builtin::parse("nope", &[]), Err(RepError::UnknownFunctor(_))));
    }
}
