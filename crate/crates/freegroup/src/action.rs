//! Braid actions on free groups and the standard inclusions between free
//! groups of different ranks.

use crate::error::FreeGroupError;
use crate::map::FreeGroupMap;
use crate::word::FreeWord;

/// A rank-2 endomorphism `g_1 ↦ W(g_1, g_2)`, `g_2 ↦ V(g_1, g_2)` acting on
/// adjacent slots `(i, i+1)` for the braid generator `σ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WadaPair {
    /// Image of `g_1`.
    pub w: FreeWord,
    /// Image of `g_2`.
    pub v: FreeWord,
}

impl WadaPair {
    fn from_text(w: &str, v: &str) -> Self {
        Self { w: FreeWord::parse(2, w).expect("valid literal"), v: FreeWord::parse(2, v).expect("valid literal") }
    }

    /// The rank-2 map defined by the pair.
    pub fn as_map(&self) -> FreeGroupMap {
        FreeGroupMap::new(2, 2, vec![self.w.clone(), self.v.clone()]).expect("rank-2 words")
    }

    /// Plugs the pair into slots `(i, i+1)` of `F_n` (identity elsewhere).
    pub fn plug(&self, n: usize, i: usize) -> Result<FreeGroupMap, FreeGroupError> {
        if i == 0 || i + 1 > n {
            return Err(FreeGroupError::GeneratorOutOfRange { index: i as i64, rank: n });
        }
        let slots = FreeGroupMap::new(2, n, vec![FreeWord::generator(n, i)?, FreeWord::generator(n, i + 1)?])?;
        let mut images: Vec<FreeWord> = (1..=n).map(|j| FreeWord::generator(n, j)).collect::<Result<_, _>>()?;
        images[i - 1] = slots.apply_word(&self.w)?;
        images[i] = slots.apply_word(&self.v)?;
        FreeGroupMap::new(n, n, images)
    }
}

/// The generating pair of Wada kind `kind ∈ 1..=7` (`m` is used by kind 1 only):
///
/// 1. `(g_2, g_2^{-m} g_1 g_2^m)`
/// 2. `(g_1, g_2)`
/// 3. `(g_2, g_1^{-1})`
/// 4. `(g_2, g_2^{-1} g_1^{-1} g_2)`
/// 5. `(g_2^{-1}, g_1^{-1})`
/// 6. `(g_2^{-1}, g_2 g_1 g_2)`
/// 7. `(g_1 g_2^{-1} g_1^{-1}, g_1 g_2^2)`
///
/// Kind 1 is parametrised so that `m = 1` is the Artin action; the pair
/// written `(g_2, g_2^m g_1 g_2^{-m})` is `wada_pair(1, -m)` here.
pub fn wada_pair(kind: u8, m: i64) -> Result<WadaPair, FreeGroupError> {
    Ok(match kind {
        1 => WadaPair { w: FreeWord::generator(2, 2)?, v: FreeWord::from_syllables(2, &[(2, -m), (1, 1), (2, m)])? },
        2 => WadaPair::from_text("g1", "g2"),
        3 => WadaPair::from_text("g2", "g1^-1"),
        4 => WadaPair::from_text("g2", "g2^-1*g1^-1*g2"),
        5 => WadaPair::from_text("g2^-1", "g1^-1"),
        6 => WadaPair::from_text("g2^-1", "g2*g1*g2"),
        7 => WadaPair::from_text("g1*g2^-1*g1^-1", "g1*g2^2"),
        k => return Err(FreeGroupError::InvalidKind(k)),
    })
}

/// Closed-form inverse pairs (each is checked by composition in the tests and
/// when attached as a certificate).
fn wada_inverse_pair(kind: u8, m: i64) -> Result<WadaPair, FreeGroupError> {
    Ok(match kind {
        1 => WadaPair { w: FreeWord::from_syllables(2, &[(1, m), (2, 1), (1, -m)])?, v: FreeWord::generator(2, 1)? },
        2 => WadaPair::from_text("g1", "g2"),
        3 => WadaPair::from_text("g2^-1", "g1"),
        4 => WadaPair::from_text("g1*g2^-1*g1^-1", "g1"),
        5 => WadaPair::from_text("g2^-1", "g1^-1"),
        6 => WadaPair::from_text("g1*g2*g1", "g1^-1"),
        7 => WadaPair::from_text("g1^2*g2", "g2^-1*g1^-1*g2"),
        k => return Err(FreeGroupError::InvalidKind(k)),
    })
}

fn check_artin_index(n: usize, gen: i64) -> Result<usize, FreeGroupError> {
    let i = gen.unsigned_abs() as usize;
    if gen == 0 || i + 1 > n {
        return Err(FreeGroupError::GeneratorOutOfRange { index: gen, rank: n });
    }
    Ok(i)
}

/// The Artin action of `σ_i^{±1}` on `F_n`.
///
/// `σ_i`: `g_i ↦ g_{i+1}`, `g_{i+1} ↦ g_{i+1}^{-1} g_i g_{i+1}`;
/// `σ_i^{-1}`: `g_i ↦ g_i g_{i+1} g_i^{-1}`, `g_{i+1} ↦ g_i`.
pub fn artin_action(n: usize, gen: i64) -> Result<FreeGroupMap, FreeGroupError> {
    let i = check_artin_index(n, gen)?;
    let forward = WadaPair::from_text("g2", "g2^-1*g1*g2");
    let backward = WadaPair::from_text("g1*g2*g1^-1", "g1");
    let (p, q) = if gen > 0 { (forward, backward) } else { (backward, forward) };
    let inv = q.plug(n, i)?;
    p.plug(n, i)?.with_inverse(inv.images().to_vec())
}

/// The Wada action of kind `kind` on `F_n` for `σ_i^{±1}`; negative
/// generators use the inverse pair.
pub fn wada_action(kind: u8, m: i64, n: usize, gen: i64) -> Result<FreeGroupMap, FreeGroupError> {
    let i = check_artin_index(n, gen)?;
    let (p, q) = if gen > 0 {
        (wada_pair(kind, m)?, wada_inverse_pair(kind, m)?)
    } else {
        (wada_inverse_pair(kind, m)?, wada_pair(kind, m)?)
    };
    let inv = q.plug(n, i)?;
    p.plug(n, i)?.with_inverse(inv.images().to_vec())
}

/// The dualities on Wada pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualKind {
    /// `(V(g_2, g_1), W(g_2, g_1))`.
    Swap,
    /// `(W(g_1^{-1}, g_2^{-1})^{-1}, V(g_1^{-1}, g_2^{-1})^{-1})`.
    Backward,
    /// The pair of the inverse automorphism, found by bounded search.
    Inverse,
}

/// Word-length bound for the inverse search.
const INVERSE_SEARCH_BOUND: usize = 8;

/// Applies a duality to a Wada pair.
pub fn wada_dual(p: &WadaPair, kind: DualKind) -> Result<WadaPair, FreeGroupError> {
    match kind {
        DualKind::Swap => {
            let swap = FreeGroupMap::new(2, 2, vec![FreeWord::generator(2, 2)?, FreeWord::generator(2, 1)?])?;
            Ok(WadaPair { w: swap.apply_word(&p.v)?, v: swap.apply_word(&p.w)? })
        }
        DualKind::Backward => {
            let invert =
                FreeGroupMap::new(2, 2, vec![FreeWord::from_letters(2, &[-1])?, FreeWord::from_letters(2, &[-2])?])?;
            Ok(WadaPair { w: invert.apply_word(&p.w)?.inv(), v: invert.apply_word(&p.v)?.inv() })
        }
        DualKind::Inverse => search_inverse(p, INVERSE_SEARCH_BOUND),
    }
}

/// Searches reduced words of length ≤ `bound` for preimages of `g_1` and
/// `g_2`, then verifies both composites are the identity.
fn search_inverse(p: &WadaPair, bound: usize) -> Result<WadaPair, FreeGroupError> {
    let phi = p.as_map();
    let targets = [FreeWord::generator(2, 1)?, FreeWord::generator(2, 2)?];
    let mut found: [Option<FreeWord>; 2] = [None, None];
    let mut frontier = vec![FreeWord::identity(2)];
    for _ in 0..bound {
        let mut next = Vec::new();
        for x in &frontier {
            let last = x.letters().last().copied();
            for l in [1i64, -1, 2, -2] {
                if last == Some(-l) {
                    continue;
                }
                let y = x.mul(&FreeWord::from_letters(2, &[l])?)?;
                let img = phi.apply_word(&y)?;
                for k in 0..2 {
                    if found[k].is_none() && img == targets[k] {
                        found[k] = Some(y.clone());
                    }
                }
                next.push(y);
            }
        }
        if found.iter().all(Option::is_some) {
            break;
        }
        frontier = next;
    }
    match found {
        [Some(w), Some(v)] => {
            let candidate = WadaPair { w, v };
            phi.with_inverse(vec![candidate.w.clone(), candidate.v.clone()])
                .map_err(|_| FreeGroupError::InverseNotFound)?;
            Ok(candidate)
        }
        _ => Err(FreeGroupError::InverseNotFound),
    }
}

/// `ι_{F_k} ∗ id_{F_n}`: `g_i ↦ g_{i+k}` from `F_n` into `F_{n+k}`.
pub fn include_left(n: usize, k: usize) -> FreeGroupMap {
    let images = (1..=n).map(|i| FreeWord::generator(n + k, i + k).expect("in range")).collect();
    FreeGroupMap::new(n, n + k, images).expect("consistent ranks")
}

/// `id_{F_n} ∗ ι_{F_k}`: `g_i ↦ g_i` from `F_n` into `F_{n+k}`.
pub fn include_right(n: usize, k: usize) -> FreeGroupMap {
    let images = (1..=n).map(|i| FreeWord::generator(n + k, i).expect("in range")).collect();
    FreeGroupMap::new(n, n + k, images).expect("consistent ranks")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, s: &str) -> FreeWord {
        FreeWord::parse(rank, s).unwrap()
    }

    fn compose_word(n: usize, f: &dyn Fn(i64) -> FreeGroupMap, letters: &[i64]) -> FreeGroupMap {
        letters.iter().fold(FreeGroupMap::identity(n), |acc, &l| acc.compose(&f(l)).unwrap())
    }

    #[test]
    fn artin_images() {
        let a = artin_action(3, 1).unwrap();
        assert_eq!(a.images(), &[w(3, "g2"), w(3, "g2^-1*g1*g2"), w(3, "g3")]);
        assert!(a.compose(&artin_action(3, -1).unwrap()).unwrap().is_identity());
        assert!(artin_action(3, 3).is_err());
        assert!(artin_action(3, 0).is_err());
    }

    /// The first violated braid or commutation relation, as `(i, j)`.
    fn braid_violation(n: usize, f: &dyn Fn(i64) -> FreeGroupMap) -> Option<(i64, i64)> {
        for i in 1..n as i64 {
            for j in 1..n as i64 {
                let holds = if (i - j).abs() == 1 {
                    compose_word(n, f, &[i, j, i]) == compose_word(n, f, &[j, i, j])
                } else if (i - j).abs() >= 2 {
                    compose_word(n, f, &[i, j]) == compose_word(n, f, &[j, i])
                } else {
                    true
                };
                if !holds {
                    return Some((i, j));
                }
            }
        }
        None
    }

    #[test]
    fn braid_relations_for_all_actions() {
        for n in 2..=6 {
            assert_eq!(braid_violation(n, &|l| artin_action(n, l).unwrap()), None);
            for kind in [1u8, 2, 3, 5, 6, 7] {
                for m in [-2, -1, 1, 2] {
                    if kind != 1 && m != 1 {
                        continue;
                    }
                    assert_eq!(braid_violation(n, &|l| wada_action(kind, m, n, l).unwrap()), None, "kind {kind}");
                }
            }
        }
    }

    #[test]
    fn displayed_kind_four_is_not_a_braid_action() {
        // The displayed pair (g2, g2^-1 g1^-1 g2) breaks σ1σ2σ1 = σ2σ1σ2 on F_3 …
        assert_eq!(braid_violation(3, &|l| wada_action(4, 0, 3, l).unwrap()), Some((1, 2)));
        // … while flipping the first exponent of V gives a genuine action.
        let repaired = WadaPair { w: w(2, "g2"), v: w(2, "g2*g1^-1*g2") };
        let inverse = wada_dual(&repaired, DualKind::Inverse).unwrap();
        for n in 2..=6 {
            let act = |l: i64| {
                let (p, q) = if l > 0 { (&repaired, &inverse) } else { (&inverse, &repaired) };
                let i = l.unsigned_abs() as usize;
                p.plug(n, i).unwrap().with_inverse(q.plug(n, i).unwrap().images().to_vec()).unwrap()
            };
            assert_eq!(braid_violation(n, &act), None);
        }
    }

    #[test]
    fn wada_examples() {
        let k4 = wada_action(4, 0, 2, 1).unwrap();
        assert_eq!(k4.images(), &[w(2, "g2"), w(2, "g2^-1*g1^-1*g2")]);
        assert!(wada_action(2, 0, 4, 2).unwrap().is_identity());
        for n in 2..=5 {
            for i in 1..n as i64 {
                assert_eq!(wada_action(1, 1, n, i).unwrap(), artin_action(n, i).unwrap());
                assert_eq!(wada_action(1, 1, n, -i).unwrap(), artin_action(n, -i).unwrap());
            }
        }
        assert!(wada_pair(8, 0).is_err());
    }

    #[test]
    fn closed_form_inverses_agree_with_search() {
        for kind in 1..=7u8 {
            for m in [-2i64, 1, 3] {
                let p = wada_pair(kind, m).unwrap();
                let searched = wada_dual(&p, DualKind::Inverse).unwrap();
                assert_eq!(searched, wada_inverse_pair(kind, m).unwrap(), "kind {kind} m {m}");
            }
        }
    }

    #[test]
    fn dualities() {
        // The pair (g2, g2^m g1 g2^-m) with m = 2 is wada_pair(1, -2).
        let k1 = wada_pair(1, -2).unwrap();
        let swapped = wada_dual(&k1, DualKind::Swap).unwrap();
        assert_eq!(swapped, WadaPair { w: w(2, "g1^2*g2*g1^-2"), v: w(2, "g1") });
        let k2 = wada_pair(2, 0).unwrap();
        assert_eq!(wada_dual(&k2, DualKind::Backward).unwrap(), k2);
        let k3 = wada_pair(3, 0).unwrap();
        assert_eq!(wada_dual(&k3, DualKind::Inverse).unwrap(), WadaPair { w: w(2, "g2^-1"), v: w(2, "g1") });
        let not_auto = WadaPair { w: w(2, "g1^2"), v: w(2, "g2") };
        assert_eq!(wada_dual(&not_auto, DualKind::Inverse), Err(FreeGroupError::InverseNotFound));
    }

    #[test]
    fn inclusions() {
        assert_eq!(include_left(2, 3).images(), &[w(5, "g4"), w(5, "g5")]);
        assert_eq!(include_right(2, 3).images(), &[w(5, "g1"), w(5, "g2")]);
        assert!(include_left(4, 0).is_identity());
    }

    #[test]
    fn action_compatibility_with_left_inclusion() {
        // include_left(n, k) ∘ a_n(σ) = a_{n+k}(ψ ♮ σ) ∘ include_left(n, k).
        let words: &[&[i64]] = &[&[], &[1], &[-1, 2], &[2, 1, -2]];
        let psis: &[&[i64]] = &[&[], &[1], &[-1, -1]];
        for n in 3..=4usize {
            for k in 0..=2usize {
                for sigma in words {
                    for psi in psis {
                        if psi.iter().any(|l| l.unsigned_abs() as usize >= k.max(1)) && !psi.is_empty() {
                            continue;
                        }
                        let inc = include_left(n, k);
                        let lhs = inc.compose(&compose_word(n, &|l| artin_action(n, l).unwrap(), sigma)).unwrap();
                        let mut combined: Vec<i64> = psi.to_vec();
                        combined.extend(sigma.iter().map(|l| l.signum() * (l.abs() + k as i64)));
                        let big = compose_word(n + k, &|l| artin_action(n + k, l).unwrap(), &combined);
                        assert_eq!(lhs, big.compose(&inc).unwrap());
                    }
                }
            }
        }
    }
}
