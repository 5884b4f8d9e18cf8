//! The `𝕂[F_n]`-module structure of `F(n+1)` obtained by restriction along
//! a family `ς_n: F_n → B_{n+1}`.

use lmkit_braidcat::{sigma_eval, SigmaFamily};
use lmkit_freegroup::GroupRingElement;
use lmkit_laurent::PolyMatrix;

use crate::error::RepError;
use crate::functor::BraidFunctor;

/// `Σ λ · F(ς_n(w))` over the terms `(w, λ)` of `c ∈ 𝕂[F_n]`, at level `n + 1`.
pub fn group_ring_matrix(
    f: &BraidFunctor,
    n: usize,
    sigma: &SigmaFamily,
    c: &GroupRingElement,
) -> Result<PolyMatrix, RepError> {
    if c.rank() != n {
        return Err(RepError::Incompatible(format!("group ring element of rank {} at level {n}", c.rank())));
    }
    let d = f.dim(n + 1)?;
    let mut acc = PolyMatrix::zeros(d, d);
    for (w, lambda) in c.terms() {
        let m = f.braid_matrix(&sigma_eval(sigma, w)?)?;
        acc = acc.add(&m.scale(lambda))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::Builtin;
    use crate::combinators::scalar_twist;
    use lmkit_freegroup::FreeWord;
    use lmkit_laurent::LaurentPoly;

    #[test]
    fn twisted_constant_sees_writhe() {
        let tx = scalar_twist(&LaurentPoly::t(), &Builtin::Constant.functor(5)).unwrap();
        for i in 1..=3 {
            let c = GroupRingElement::from_word(FreeWord::generator(3, i).unwrap());
            let m = group_ring_matrix(&tx, 3, &SigmaFamily::pure_braid(), &c).unwrap();
            assert_eq!(m, PolyMatrix::scalar(1, &LaurentPoly::t_pow(2)));
        }
    }

    #[test]
    fn unit_word_gives_identity() {
        let bur = Builtin::Burau(LaurentPoly::t()).functor(4);
        let m = group_ring_matrix(&bur, 2, &SigmaFamily::pure_braid(), &GroupRingElement::one(2)).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn trivial_family_gives_augmentation() {
        let bur = Builtin::Burau(LaurentPoly::t()).functor(4);
        let mut c = GroupRingElement::term(FreeWord::parse(2, "g1*g2").unwrap(), LaurentPoly::t());
        c.add_term(FreeWord::parse(2, "g2^-1").unwrap(), &LaurentPoly::from_int(3));
        let m = group_ring_matrix(&bur, 2, &SigmaFamily::trivial(), &c).unwrap();
        assert_eq!(m, PolyMatrix::scalar(3, &c.augmentation()));
    }

    #[test]
    fn rank_is_checked() {
        let bur = Builtin::Burau(LaurentPoly::t()).functor(4);
        assert!(group_ring_matrix(&bur, 2, &SigmaFamily::trivial(), &GroupRingElement::one(3)).is_err());
    }
}
