//! Fox calculus identities on random words and the braid relations of the
//! Artin and Wada actions, through the public API.

use lmkit_freegroup::{artin_action, fox_derivatives, wada_action, FreeGroupMap, FreeWord, GroupRingElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn word_strategy(rank: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1..=rank as i64, any::<bool>()), 0..8).prop_map(move |ls| {
        FreeWord::from_letters(rank, &ls.iter().map(|&(g, s)| if s { g } else { -g }).collect::<Vec<_>>()).unwrap()
    })
}

fn ring(w: &FreeWord) -> GroupRingElement {
    GroupRingElement::from_word(w.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Right Fox derivatives satisfy `∂(uv) = ∂(u)·v + ∂(v)`.
    #[test]
    fn product_rule(u in word_strategy(3), v in word_strategy(3)) {
        let (du, dv, duv) = (fox_derivatives(&u), fox_derivatives(&v), fox_derivatives(&u.mul(&v).unwrap()));
        for i in 1..=3 {
            let expected = du.coord(i).mul(&ring(&v)).unwrap().add(dv.coord(i)).unwrap();
            prop_assert_eq!(duv.coord(i), &expected);
        }
    }

    /// `∂(w^{-1}) = −∂(w)·w^{-1}`.
    #[test]
    fn inverse_rule(w in word_strategy(4)) {
        let (d, di) = (fox_derivatives(&w), fox_derivatives(&w.inv()));
        for i in 1..=4 {
            prop_assert_eq!(di.coord(i), &d.coord(i).mul(&ring(&w.inv())).unwrap().neg());
        }
    }

    /// The expansion of the derivative vector recovers `w − 1`.
    #[test]
    fn expansion_recovers_the_word(w in word_strategy(5)) {
        let expected = ring(&w).sub(&GroupRingElement::one(5)).unwrap();
        prop_assert_eq!(fox_derivatives(&w).expand(), expected);
    }

    /// The augmentation is a ring homomorphism to the coefficients.
    #[test]
    fn augmentation_is_multiplicative(u in word_strategy(2), v in word_strategy(2)) {
        let (a, b) = (ring(&u).add(&ring(&v)).unwrap(), ring(&v).sub(&ring(&u).mul(&ring(&v)).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().augmentation(), &a.augmentation() * &b.augmentation());
    }
}

#[test]
fn derivatives_of_powers() {
    // ∂_1(g_1^3) = 1 + g_1 + g_1^2: the sum of the suffixes after each letter.
    let w = FreeWord::from_letters(2, &[1, 1, 1]).unwrap();
    let mut expected = GroupRingElement::zero(2);
    for k in 0..3 {
        expected = expected.add(&ring(&FreeWord::generator(2, 1).unwrap().pow(k))).unwrap();
    }
    let d = fox_derivatives(&w);
    assert_eq!(d.coord(1), &expected);
    assert!(d.coord(2).is_zero());
}

fn braid_relations_hold(n: usize, action: impl Fn(usize, i64) -> FreeGroupMap) -> bool {
    (1..n).all(|i| {
        (i + 1..n).all(|j| {
            let (a, b) = (action(n, i as i64), action(n, j as i64));
            if j == i + 1 {
                a.compose(&b).unwrap().compose(&a).unwrap() == b.compose(&a).unwrap().compose(&b).unwrap()
            } else {
                a.compose(&b).unwrap() == b.compose(&a).unwrap()
            }
        }) && action(n, i as i64).compose(&action(n, -(i as i64))).unwrap().is_identity()
    })
}

#[test]
fn artin_action_is_a_braid_action_fixing_the_boundary_word() {
    for n in 2..=6 {
        assert!(braid_relations_hold(n, |n, g| artin_action(n, g).unwrap()), "n = {n}");
        let boundary = FreeWord::from_letters(n, &(1..=n as i64).collect::<Vec<_>>()).unwrap();
        for i in 1..n as i64 {
            for g in [i, -i] {
                assert_eq!(artin_action(n, g).unwrap().apply_word(&boundary).unwrap(), boundary);
            }
        }
    }
}

#[test]
fn wada_actions_satisfy_the_braid_relations_except_the_displayed_fourth() {
    for kind in [1u8, 2, 3, 5, 6, 7] {
        for n in 2..=5 {
            assert!(braid_relations_hold(n, |n, g| wada_action(kind, 1, n, g).unwrap()), "kind {kind}, n = {n}");
        }
    }
    assert!(!braid_relations_hold(3, |n, g| wada_action(4, 1, n, g).unwrap()));
}

#[test]
fn actions_are_automorphisms_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let n = rng.gen_range(2..=5usize);
        let len = rng.gen_range(0..=8usize);
        let letters: Vec<i64> =
            (0..len).map(|_| rng.gen_range(1..=n as i64) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let w = FreeWord::from_letters(n, &letters).unwrap();
        let i = rng.gen_range(1..n as i64);
        let (a, b) = (artin_action(n, i).unwrap(), artin_action(n, -i).unwrap());
        assert_eq!(b.apply_word(&a.apply_word(&w).unwrap()).unwrap(), w);
    }
}
