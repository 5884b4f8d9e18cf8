//! Acceptance suite: one pass/fail line per criterion.
//!
//! Each criterion is a list of parts. A few parts are known to be red: the
//! claim they test does not hold as stated, and the suite asserts that it
//! really fails (and prints the line as FAIL). The target exits non-zero
//! when any other part fails, or when a known-red part unexpectedly passes.
//!
//! Pinned parameters: every range, word length, seed and sample size below
//! is fixed; all comparisons are exact (no tolerances).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lmkit_braidcat::{braiding, ubeta_compose, ubeta_equal, ubeta_monoidal, MorphismWitness, UBetaMorphism};
use lmkit_cli::fixtures;
use lmkit_freegroup::{fox_derivatives, FreeWord, GroupRingElement};
use lmkit_laurent::PolyMatrix;
use lmkit_longmoody::{
    check_additivity, check_burau_equivalence, check_coherence, check_reliability, lm_apply,
    trivial_sigma_factorization, ActionFamily, Intertwiner, LMConfig, CERTAINTY,
};
use lmkit_polyfun::{
    delta, delta_power, estimate_strong_degree, kappa_lm_isomorphism, rank_one_isomorphism, verify_degree_theorems,
    verify_splitting_theorem,
};
use lmkit_repfun::{check_functor_criterion, check_natural, corrupt_entry, translation, BraidFunctor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Res<T> = Result<T, Box<dyn std::error::Error>>;

/// One verified claim within a criterion.
struct Part {
    name: String,
    ok: bool,
    /// The claim is known not to hold as stated; the part must fail.
    known_red: bool,
    detail: String,
}

#[derive(Default)]
struct Parts(Vec<Part>);

impl Parts {
    fn add(&mut self, name: &str, r: Res<(bool, String)>) {
        self.push(name, r, false);
    }

    fn add_red(&mut self, name: &str, r: Res<(bool, String)>) {
        self.push(name, r, true);
    }

    fn push(&mut self, name: &str, r: Res<(bool, String)>, known_red: bool) {
        let (ok, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.0.push(Part { name: name.into(), ok, known_red, detail });
    }
}

fn pass_if(ok: bool, detail: impl Into<String>) -> Res<(bool, String)> {
    Ok((ok, detail.into()))
}

fn builtin(name: &str, range: usize) -> Res<BraidFunctor> {
    Ok(lmkit_cli::expr::functor(name, range)?)
}

// 1. Braid relations of Burau, reduced Burau, TYM and LK up to 7 strands.
fn braid_relations() -> Parts {
    let mut parts = Parts::default();
    let start = Instant::now();
    for name in ["burau", "reduced-burau", "tym", "lk"] {
        parts.add(
            name,
            (|| {
                let f = builtin(name, 7)?;
                let mut checked = 0;
                for n in 2..=7 {
                    let gens: Vec<PolyMatrix> = (1..n as i64).map(|i| f.generator(n, i)).collect::<Result<_, _>>()?;
                    let inv: Vec<PolyMatrix> = (1..n as i64).map(|i| f.generator(n, -i)).collect::<Result<_, _>>()?;
                    for (a, b) in gens.iter().zip(&inv) {
                        checked += 1;
                        if !a.mul(b)?.is_identity() {
                            return pass_if(false, format!("inverse fails at n = {n}"));
                        }
                    }
                    for i in 0..gens.len() {
                        for j in i + 1..gens.len() {
                            let (a, b) = (&gens[i], &gens[j]);
                            checked += 1;
                            let holds = if j == i + 1 {
                                a.mul(b)?.mul(a)? == b.mul(a)?.mul(b)?
                            } else {
                                a.mul(b)? == b.mul(a)?
                            };
                            if !holds {
                                return pass_if(false, format!("relation s{} s{} fails at n = {n}", i + 1, j + 1));
                            }
                        }
                    }
                }
                pass_if(true, format!("{checked} relations"))
            })(),
        );
    }
    let elapsed = start.elapsed();
    parts.add("runtime < 10 s", pass_if(elapsed < Duration::from_secs(10), format!("{:.2} s", elapsed.as_secs_f64())));
    parts
}

// 2. Functor criterion for every built-in at N = 5, L = 3, and a located
//    one-entry corruption.
fn functor_criteria() -> Parts {
    let mut parts = Parts::default();
    let names = [
        "constant",
        "burau",
        "reduced-burau",
        "tym",
        "lk",
        "atomic(0)",
        "atomic(1)",
        "atomic(2)",
        "atomic(3)",
        "t1",
        "e(0)",
        "e(1)",
        "e(2)",
        "e(3)",
    ];
    for name in names {
        parts.add(
            name,
            (|| {
                let r = check_functor_criterion(&builtin(name, 5)?, 5, 3)?;
                pass_if(r.passed(), format!("{} identities", r.checked))
            })(),
        );
    }
    parts.add(
        "corruption located",
        (|| {
            let f = corrupt_entry(&builtin("burau", 5)?, 3, 2, 1, 2);
            let r = check_functor_criterion(&f, 5, 3)?;
            let located = r.violations.iter().any(|v| v.level == 3 && v.entry.is_some());
            pass_if(!r.passed() && located, format!("{} violations, first: {}", r.violations.len(), r.violations[0]))
        })(),
    );
    parts
}

/// Right Fox derivative by its closed form: a letter `g_i` at position `k`
/// contributes the suffix after it, a letter `g_i^{-1}` contributes minus
/// the suffix starting at it.
fn fox_closed_form(w: &FreeWord, i: usize) -> Res<GroupRingElement> {
    let rank = w.rank();
    let letters = w.letters();
    let mut d = GroupRingElement::zero(rank);
    for (k, &l) in letters.iter().enumerate() {
        if l == i as i64 {
            d = d.add(&GroupRingElement::from_word(FreeWord::from_letters(rank, &letters[k + 1..])?))?;
        } else if l == -(i as i64) {
            d = d.sub(&GroupRingElement::from_word(FreeWord::from_letters(rank, &letters[k..])?))?;
        }
    }
    Ok(d)
}

// 3. Fundamental formula of the Fox calculus on 1000 seeded random words.
fn fox_oracle() -> Parts {
    let mut parts = Parts::default();
    parts.add(
        "1000 words, rank <= 5, length <= 8, seed 3",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for sample in 0..1000 {
                let rank = rng.gen_range(1..=5usize);
                let len = rng.gen_range(0..=8usize);
                let letters: Vec<i64> =
                    (0..len).map(|_| rng.gen_range(1..=rank as i64) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
                let w = FreeWord::from_letters(rank, &letters)?;
                let ders = fox_derivatives(&w);
                let mut total = GroupRingElement::one(rank);
                for i in 1..=rank {
                    if ders.coord(i) != &fox_closed_form(&w, i)? {
                        return pass_if(
                            false,
                            format!("sample {sample}: derivative {i} of {w} disagrees with the closed form"),
                        );
                    }
                    let gi =
                        GroupRingElement::from_word(FreeWord::generator(rank, i)?).sub(&GroupRingElement::one(rank))?;
                    total = total.add(&gi.mul(ders.coord(i))?)?;
                }
                if total != GroupRingElement::from_word(w.clone()) {
                    return pass_if(false, format!("sample {sample}: formula fails for {w}"));
                }
            }
            pass_if(true, "sum (g_i - 1) d_i(w) + 1 = w for all samples")
        })(),
    );
    parts
}

// 4. Coherence and reliability for (artin, pure braid) at N = 5, L = 4;
//    coherence for every Wada action with the trivial family.
fn coherence() -> Parts {
    let mut parts = Parts::default();
    parts.add(
        "certificate: LK at >= 3 seeded points plus symbolic Burau",
        pass_if(CERTAINTY >= 3, format!("{CERTAINTY} points")),
    );
    parts.add(
        "artin, pure-braid: coherence",
        (|| {
            let r = check_coherence(&LMConfig::artin(), 5, 4, 0)?;
            pass_if(r.passed() && r.conditions.len() == 3, format!("{} conditions, seed 0", r.conditions.len()))
        })(),
    );
    parts.add(
        "artin, pure-braid: reliability",
        (|| {
            let r = check_reliability(&LMConfig::artin(), 5, 4)?;
            pass_if(r.passed() && r.conditions.len() == 2, format!("{} conditions", r.conditions.len()))
        })(),
    );
    for kind in 1..=7u8 {
        parts.add(
            &format!("wada{kind}, trivial: coherence"),
            (|| {
                let r = check_coherence(&LMConfig::wada(kind), 5, 4, 0)?;
                let rel = check_reliability(&LMConfig::wada(kind), 5, 4)?;
                pass_if(
                    r.passed(),
                    format!("reliability (informational): {}", if rel.passed() { "pass" } else { "fail" }),
                )
            })(),
        );
    }
    parts
}

fn fixture(id: &str) -> Res<(bool, String)> {
    let fx = fixtures::load()?.into_iter().find(|f| f.id == id).ok_or_else(|| format!("missing fixture {id}"))?;
    let r = fx.check()?;
    let opposite = fx.check_with(fx.opposite())?;
    let flag = format!("{:?}", fx.orientation);
    pass_if(r.passed() && !opposite.passed(), format!("{} identities, flag {flag}, opposite flag rejected", r.checked))
}

// 5. Twisted LM of the constant functor and its equivalence with Burau at t².
fn twisted_lm_burau() -> Parts {
    let mut parts = Parts::default();
    parts.add("blocks equal the display up to the flag, n <= 6", fixture("twisted-lm-artin-constant"));
    parts.add_red(
        "r_n conjugates to Bur_{t^2}(s_i), n <= 6",
        (|| {
            let r = check_burau_equivalence(Intertwiner::Reversal, 6)?;
            let first = r.violations.first().map(ToString::to_string).unwrap_or_default();
            pass_if(r.passed(), format!("{} of {} generators fail; first: {first}", r.violations.len(), r.checked))
        })(),
    );
    parts.add(
        "Bur_{t^2}(half twist)^{-1} r_n conjugates to Bur_{t^2}(s_i), n <= 6",
        (|| {
            let r = check_burau_equivalence(Intertwiner::ReversalAndHalfTwist, 6)?;
            pass_if(r.passed(), format!("{} generators", r.checked))
        })(),
    );
    parts
}

// 6. The second Wada action gives block-diagonal copies; the third gives the
//    displayed pattern.
fn wada_reproductions() -> Parts {
    let mut parts = Parts::default();
    for base in ["constant", "burau"] {
        parts.add(
            &format!("LM_2({base})(s_i) = {base}(s_i)^n, n <= 5"),
            (|| {
                let f = builtin(base, 6)?;
                let lm = lm_apply(&LMConfig::wada(2), &f)?;
                let tau = translation(1, &f);
                let mut checked = 0;
                for n in 1..=5 {
                    for i in 1..n as i64 {
                        for l in [i, -i] {
                            checked += 1;
                            let expected = PolyMatrix::block_diagonal(&vec![tau.generator(n, l)?; n]);
                            if lm.generator(n, l)? != expected {
                                return pass_if(false, format!("s{l} at n = {n}"));
                            }
                        }
                    }
                }
                pass_if(true, format!("{checked} generators"))
            })(),
        );
    }
    parts.add("t^-1 LM_3(t X) blocks equal the display, n <= 5", fixture("twisted-lm-wada3-constant"));
    parts
}

fn degree_part(parts: &mut Parts, name: &str, expected: Option<i64>, very_strong: bool) {
    parts.add(
        name,
        (|| {
            let r = estimate_strong_degree(&builtin(name, 8 + 3 + 2)?, 8, 3)?;
            pass_if(
                r.strong_degree_at_range == expected && r.very_strong == very_strong && r.uncertified.is_none(),
                r.to_string(),
            )
        })(),
    );
}

// 7. Degree table at N = 8.
fn degree_table() -> Parts {
    let mut parts = Parts::default();
    degree_part(&mut parts, "burau", Some(1), true);
    degree_part(&mut parts, "tym", Some(1), true);
    degree_part(&mut parts, "reduced-burau", Some(2), false);
    parts.add(
        "delta(reduced-burau) = T1 by a natural isomorphism",
        (|| {
            let d = delta(&builtin("reduced-burau", 10)?, 9)?;
            let eta = rank_one_isomorphism(&d, &builtin("t1", 8)?, 8)?;
            let r = check_natural(&eta, 8)?;
            pass_if(r.passed(), format!("{} identities", r.checked))
        })(),
    );
    parts.add(
        "delta^2(reduced-burau) = A_0 by a natural isomorphism",
        (|| {
            let d2 = delta_power(&builtin("reduced-burau", 10)?, 2)?;
            let eta = rank_one_isomorphism(&d2, &builtin("atomic(0)", 8)?, 8)?;
            let r = check_natural(&eta, 8)?;
            pass_if(r.passed(), format!("{} identities", r.checked))
        })(),
    );
    degree_part(&mut parts, "lk", Some(2), true);
    parts.add("delta(lk) matches the displayed block pattern", fixture("difference-of-lawrence-krammer"));
    for k in 0..=3 {
        degree_part(&mut parts, &format!("atomic({k})"), Some(k), false);
    }
    for l in 1..=2 {
        parts.add_red(
            &format!("e({l}) has degree {l}, very strong"),
            (|| {
                let r = estimate_strong_degree(&builtin(&format!("e({l})"), 8 + 3 + 2)?, 8, 3)?;
                pass_if(r.strong_degree_at_range == Some(l) && r.very_strong, r.to_string())
            })(),
        );
    }
    parts
}

// 8. The splitting theorem for (artin, pure braid), n <= 4.
fn splitting() -> Parts {
    let mut parts = Parts::default();
    let cfg = LMConfig::artin();
    for base in ["constant", "burau", "tym"] {
        parts.add(
            base,
            (|| {
                let f = builtin(base, 6)?;
                let r = verify_splitting_theorem(&cfg, &f, 4)?;
                let eta = kappa_lm_isomorphism(&cfg, &f, 4)?;
                let kappa_zero = (0..=4).all(|n| eta.source().dim(n).is_ok_and(|d| d == 0));
                pass_if(r.passed() && kappa_zero, format!("{} identities, both kappa sides zero", r.checked))
            })(),
        );
    }
    parts.add(
        "atomic(2): nonzero kappa",
        (|| {
            let f = builtin("atomic(2)", 6)?;
            let r = verify_splitting_theorem(&cfg, &f, 4)?;
            let eta = kappa_lm_isomorphism(&cfg, &f, 4)?;
            let dims: Vec<usize> = (0..=4).map(|n| eta.target().dim(n)).collect::<Result<_, _>>()?;
            pass_if(
                r.passed() && dims.iter().any(|&d| d > 0),
                format!("{} identities, kappa(LM A_2) dims {dims:?}", r.checked),
            )
        })(),
    );
    parts
}

// 9. Degree growth under LM at N = 5, and LM applied twice to X at N = 6.
fn degree_growth() -> Parts {
    let mut parts = Parts::default();
    for base in ["constant", "burau", "tym"] {
        parts.add(
            base,
            (|| {
                let r = verify_degree_theorems(&LMConfig::artin(), &builtin(base, 5 + 2 + 4)?, 5, 2)?;
                pass_if(r.passed() && r.base.very_strong && r.lm.very_strong, format!("{} -> {}", r.base, r.lm))
            })(),
        );
    }
    parts.add(
        "LM^2(X) has degree 2, very strong, N = 6",
        (|| {
            let cfg = LMConfig::artin();
            let f = lm_apply(&cfg, &lm_apply(&cfg, &builtin("constant", 6 + 3 + 2 + 2)?)?)?;
            let r = estimate_strong_degree(&f, 6, 3)?;
            pass_if(r.strong_degree_at_range == Some(2) && r.very_strong, r.to_string())
        })(),
    );
    parts
}

// 10. Additivity and the trivial-family factorization, n <= 4.
fn additivity_factorization() -> Parts {
    let mut parts = Parts::default();
    for (label, cfg) in [("artin", LMConfig::artin()), ("wada3", LMConfig::wada(3))] {
        parts.add(
            &format!("LM(burau + tym) = LM(burau) + LM(tym), {label}"),
            (|| {
                let r = check_additivity(&cfg, &builtin("burau", 5)?, &builtin("tym", 5)?, 4)?;
                pass_if(r.passed(), format!("{} identities", r.checked))
            })(),
        );
    }
    for action in ["artin", "wada3"] {
        parts.add(
            &format!("LM(burau) = LM(X) (x) tau_1(burau), {action}, trivial family"),
            (|| {
                let r = trivial_sigma_factorization(&ActionFamily::parse(action)?, &builtin("burau", 5)?, 4)?;
                pass_if(r.passed(), format!("{} identities", r.checked))
            })(),
        );
    }
    parts
}

// 11. b_{1,2} ∘ (ι₁ ♮ id₂) and id₂ ♮ ι₁ are different morphisms 2 → 3.
fn braiding_failure() -> Parts {
    let mut parts = Parts::default();
    let morphisms = || -> Res<(UBetaMorphism, UBetaMorphism)> {
        let iota = UBetaMorphism::stabilization(0, 1)?;
        let b12 = UBetaMorphism::automorphism(braiding(1, 2));
        let lhs = ubeta_compose(&b12, &ubeta_monoidal(&iota, &UBetaMorphism::identity(2)))?;
        let rhs = ubeta_monoidal(&UBetaMorphism::identity(2), &iota);
        Ok((lhs, rhs))
    };
    parts.add(
        "distinct as morphisms (moved generator)",
        (|| {
            let (lhs, rhs) = morphisms()?;
            match ubeta_equal(&lhs, &rhs)? {
                Err(MorphismWitness::MovedGenerator { generator, image }) => {
                    pass_if(true, format!("{lhs} vs {rhs}: g{generator} -> {image}"))
                }
                other => pass_if(false, format!("{other:?}")),
            }
        })(),
    );
    for name in ["burau", "lk"] {
        parts.add(
            &format!("{name} evaluations differ"),
            (|| {
                let (lhs, rhs) = morphisms()?;
                let f = builtin(name, 3)?;
                let (a, b) = (f.functor_eval(&lhs)?, f.functor_eval(&rhs)?);
                match a.first_difference(&b) {
                    Some((r, c)) => pass_if(true, format!("entry ({r}, {c}): {} vs {}", a.get(r, c), b.get(r, c))),
                    None => pass_if(false, "equal matrices"),
                }
            })(),
        );
    }
    parts
}

/// A titled criterion and the function computing its parts.
type Criterion = (&'static str, fn() -> Parts);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("braid relations, n <= 7", braid_relations),
        ("functor criteria, N = 5, L = 3", functor_criteria),
        ("Fox calculus oracle", fox_oracle),
        ("coherence and reliability, N = 5, L = 4", coherence),
        ("twisted LM of X and Burau at t^2, n <= 6", twisted_lm_burau),
        ("second and third Wada actions, n <= 5", wada_reproductions),
        ("degree table, N = 8", degree_table),
        ("splitting theorem, n <= 4", splitting),
        ("degree growth under LM", degree_growth),
        ("additivity and factorization, n <= 4", additivity_factorization),
        ("braiding failure in the bracket category", braiding_failure),
    ];
    let mut unexpected = 0;
    let total = Instant::now();
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let parts = run().0;
        let ok = parts.iter().all(|p| p.ok);
        let known = parts.iter().any(|p| p.known_red);
        println!(
            "criterion {:>2}: {} {title} ({:.2} s){}",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            if !ok && known { " [known red]" } else { "" }
        );
        for p in &parts {
            let surprise = p.ok == p.known_red;
            unexpected += usize::from(surprise);
            if !p.ok || surprise {
                let tag = match (p.ok, p.known_red) {
                    (false, true) => "red as recorded",
                    (true, true) => "UNEXPECTED PASS of a known-red part",
                    _ => "UNEXPECTED FAILURE",
                };
                println!("    {} ({tag}): {}", p.name, p.detail);
            }
        }
    }
    println!("acceptance: {unexpected} unexpected outcomes, {:.1} s total", total.elapsed().as_secs_f64());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
