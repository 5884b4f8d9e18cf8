//! Braid-word equality, the braiding and half twist, and morphisms of the
//! bracket category, through the public API.

use lmkit_braidcat::{
    braid_equal, braiding, half_twist, sigma_eval, ubeta_compose, ubeta_equal, ubeta_monoidal, words_up_to, BraidWord,
    MorphismWitness, SigmaFamily, UBetaMorphism,
};
use lmkit_freegroup::FreeWord;

fn w(strands: usize, letters: &[i64]) -> BraidWord {
    BraidWord::new(strands, letters).unwrap()
}

fn same(u: &BraidWord, v: &BraidWord) -> bool {
    braid_equal(u, v, 3, 0).unwrap().equal
}

#[test]
fn relations_hold_and_distinct_words_get_a_witness() {
    assert!(same(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])));
    assert!(same(&w(4, &[1, 3]), &w(4, &[3, 1])));
    assert!(same(&w(3, &[1, -1, 2]), &w(3, &[2])));
    let r = braid_equal(&w(3, &[1, 2]), &w(3, &[2, 1]), 3, 0).unwrap();
    assert!(!r.equal);
    assert!(r.witness.is_some());
    assert!(braid_equal(&w(3, &[1]), &w(4, &[1]), 3, 0).is_err());
}

#[test]
fn the_full_twist_is_central() {
    for n in 2..=5 {
        let full = half_twist(n).pow(2);
        for i in 1..n as i64 {
            let s = w(n, &[i]);
            assert!(same(&full.compose(&s).unwrap(), &s.compose(&full).unwrap()), "n = {n}, s{i}");
        }
    }
}

#[test]
fn the_half_twist_reverses_generators() {
    for n in 2..=6 {
        let d = half_twist(n);
        for i in 1..n as i64 {
            let conj = d.compose(&w(n, &[i])).unwrap().compose(&d.inverse()).unwrap();
            assert!(same(&conj, &w(n, &[n as i64 - i])), "n = {n}, s{i}");
        }
    }
}

#[test]
fn braiding_is_natural() {
    for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)] {
        let b = braiding(n, m);
        for u in words_up_to(n, 2) {
            for v in words_up_to(m, 2) {
                let lhs = b.compose(&u.monoidal(&v)).unwrap();
                let rhs = v.monoidal(&u).compose(&b).unwrap();
                assert!(same(&lhs, &rhs), "b_{{{n},{m}}} with {u} and {v}");
            }
        }
    }
}

#[test]
fn sigma_families_are_homomorphisms() {
    let sigma = SigmaFamily::pure_braid();
    let (a, b) = (FreeWord::from_letters(3, &[1, -2]).unwrap(), FreeWord::from_letters(3, &[3, 2, 2]).unwrap());
    let lhs = sigma_eval(&sigma, &a.mul(&b).unwrap()).unwrap();
    let rhs = sigma_eval(&sigma, &a).unwrap().compose(&sigma_eval(&sigma, &b).unwrap()).unwrap();
    assert_eq!(lhs.strands(), 4);
    assert!(same(&lhs, &rhs));
    assert!(sigma_eval(&SigmaFamily::trivial(), &a).unwrap().is_empty());
}

#[test]
fn bracket_composition_is_associative_and_unital() {
    let f = UBetaMorphism::new(1, 2, w(2, &[1])).unwrap();
    let g = UBetaMorphism::new(2, 4, w(4, &[2, -3, 1])).unwrap();
    let h = UBetaMorphism::new(4, 5, w(5, &[4, 1])).unwrap();
    let left = ubeta_compose(&h, &ubeta_compose(&g, &f).unwrap()).unwrap();
    let right = ubeta_compose(&ubeta_compose(&h, &g).unwrap(), &f).unwrap();
    assert_eq!(ubeta_equal(&left, &right).unwrap(), Ok(()));
    let id = UBetaMorphism::identity(2);
    assert_eq!(ubeta_equal(&ubeta_compose(&g, &id).unwrap(), &g).unwrap(), Ok(()));
    assert_eq!(ubeta_equal(&ubeta_compose(&id, &f).unwrap(), &f).unwrap(), Ok(()));
    assert!(ubeta_compose(&f, &g).is_err());
}

#[test]
fn stabilizations_compose_and_absorb_braids_on_the_new_strands() {
    let a = UBetaMorphism::stabilization(1, 3).unwrap();
    let b = UBetaMorphism::stabilization(3, 4).unwrap();
    assert_eq!(
        ubeta_equal(&ubeta_compose(&b, &a).unwrap(), &UBetaMorphism::stabilization(1, 4).unwrap()).unwrap(),
        Ok(())
    );
    // [2, σ] = [2, σ ∘ (τ ♮ id_1)] for τ on the two new strands.
    let sigma = w(3, &[2, 1]);
    let tau = w(2, &[1, 1, 1]).monoidal(&BraidWord::identity(1));
    let x = UBetaMorphism::new(1, 3, sigma.clone()).unwrap();
    let y = UBetaMorphism::new(1, 3, sigma.compose(&tau).unwrap()).unwrap();
    assert_eq!(ubeta_equal(&x, &y).unwrap(), Ok(()));
    // A braid touching the old strand changes the morphism.
    let z = UBetaMorphism::new(1, 3, sigma.compose(&w(3, &[2])).unwrap()).unwrap();
    assert!(matches!(ubeta_equal(&x, &z).unwrap(), Err(MorphismWitness::MovedGenerator { .. })));
}

#[test]
fn the_braiding_is_not_a_pre_braiding_witness() {
    let iota = UBetaMorphism::stabilization(0, 1).unwrap();
    let lhs = ubeta_compose(
        &UBetaMorphism::automorphism(braiding(1, 2)),
        &ubeta_monoidal(&iota, &UBetaMorphism::identity(2)),
    )
    .unwrap();
    let rhs = ubeta_monoidal(&UBetaMorphism::identity(2), &iota);
    assert_eq!((lhs.source(), lhs.target()), (2, 3));
    assert_eq!((rhs.source(), rhs.target()), (2, 3));
    match ubeta_equal(&lhs, &rhs).unwrap() {
        Err(MorphismWitness::MovedGenerator { generator, .. }) => assert!((2..=3).contains(&generator)),
        other => panic!("expected a moved generator, got {other:?}"),
    }
}
