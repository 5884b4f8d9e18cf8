//! The splitting and degree theorems for the Long-Moody functor, and the
//! commutation of translation with δ₁ and κ₁, on small ranges.

use lmkit_laurent::LaurentPoly;
use lmkit_longmoody::{lm_apply, LMConfig};
use lmkit_polyfun::{
    check_translation_commutation, delta, delta_lm_isomorphism, estimate_strong_degree, kappa_lm_isomorphism,
    verify_degree_theorems, verify_splitting_theorem,
};
use lmkit_repfun::Builtin;

#[test]
fn splitting_theorem_for_constant_burau_and_tym() {
    for b in [Builtin::Constant, Builtin::Burau(LaurentPoly::t()), Builtin::Tym(LaurentPoly::t())] {
        let r = verify_splitting_theorem(&LMConfig::artin(), &b.functor(6), 4).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checked > 50);
    }
}

#[test]
fn difference_of_lm_constant_is_tau_two_constant() {
    let x = Builtin::Constant.functor(6);
    let lm = lm_apply(&LMConfig::artin(), &x).unwrap();
    let d = delta(&lm, 4).unwrap();
    let iso = delta_lm_isomorphism(&LMConfig::artin(), &x, 4).unwrap();
    for n in 0..=4 {
        // (n + 1) − n = 1, and LM(δ₁𝔛) = LM(0) = 0
        assert_eq!(d.dim(n).unwrap(), 1);
        assert_eq!(iso.target().dim(n).unwrap(), 1);
    }
}

#[test]
fn evanescence_commutes_with_lm_on_an_atomic_functor() {
    let a2 = Builtin::Atomic(2).functor(6);
    let r = verify_splitting_theorem(&LMConfig::artin(), &a2, 4).unwrap();
    assert!(r.passed(), "{r}");
    let iso = kappa_lm_isomorphism(&LMConfig::artin(), &a2, 4).unwrap();
    let dims: Vec<usize> = (0..=4).map(|n| iso.target().dim(n).unwrap()).collect();
    assert_eq!(dims, vec![0, 1, 0, 0, 0]);
    assert!(iso.component(1).unwrap().is_identity());
}

#[test]
fn splitting_theorem_under_a_wada_action() {
    let r = verify_splitting_theorem(&LMConfig::wada(3), &Builtin::Burau(LaurentPoly::t()).functor(5), 3).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn degree_grows_by_one() {
    for (b, d) in [(Builtin::Constant, 0), (Builtin::Burau(LaurentPoly::t()), 1), (Builtin::Tym(LaurentPoly::t()), 1)] {
        let r = verify_degree_theorems(&LMConfig::artin(), &b.functor(5 + d + 4), 5, d).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.lm.strong_degree_at_range, Some(d as i64 + 1));
        assert!(r.lm.very_strong);
        assert_eq!(r.translations.len(), 2);
    }
}

#[test]
fn iterated_lm_of_constant_has_degree_two() {
    let cfg = LMConfig::artin();
    let lm2 = lm_apply(&cfg, &lm_apply(&cfg, &Builtin::Constant.functor(12)).unwrap()).unwrap();
    let r = estimate_strong_degree(&lm2, 6, 2).unwrap();
    assert_eq!(r.strong_degree_at_range, Some(2), "{r}");
    assert!(r.very_strong);
}

#[test]
fn translation_commutes_with_difference_and_evanescence() {
    for b in [
        Builtin::Burau(LaurentPoly::t()),
        Builtin::ReducedBurau,
        Builtin::Tym(LaurentPoly::t()),
        Builtin::LawrenceKrammer,
        Builtin::Atomic(2),
        Builtin::T1,
    ] {
        let r = check_translation_commutation(&b.functor(6), 4).unwrap();
        assert!(r.passed(), "{r}");
    }
}
