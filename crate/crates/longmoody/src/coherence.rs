//! Range-bounded verification of the coherence conditions (stability,
//! action compatibility, semidirect factorization) and of the two
//! reliability conditions for a pair `(a, ς)`.

use std::fmt;

use lmkit_braidcat::{braiding, sigma_eval, words_up_to, BraidOracle, BraidWord, Witness};
use lmkit_freegroup::{include_left, FreeGroupMap, FreeWord};
use serde::Serialize;

use crate::config::LMConfig;
use crate::error::LmError;

/// Number of seeded Lawrence–Krammer points used for every braid equality
/// (symbolic Burau is always compared first).
pub const CERTAINTY: usize = 3;

/// Outcome of one condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// The ranges a verdict refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RangeInfo {
    /// Largest level `N`.
    pub n_max: usize,
    /// Word-length bound `L` (0 when no words are enumerated).
    pub word_len: usize,
}

/// An explicit counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionWitness {
    /// Level `n`.
    pub n: usize,
    /// Second level `n′`, for conditions that involve two levels.
    pub n_prime: Option<usize>,
    /// The braid word involved, if any.
    pub braid: Option<String>,
    /// The free generator `g_i` involved, if any (1-based).
    pub generator: Option<usize>,
    /// Human-readable description of the failing identity.
    pub detail: String,
    /// Evaluation certificate for braid inequalities.
    pub certificate: Option<Witness>,
}

/// The verdict on one condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: String,
    pub verdict: Verdict,
    pub range: RangeInfo,
    /// Number of identities verified.
    pub checked: usize,
    pub witness: Option<ConditionWitness>,
    /// Seed of the evaluation points (`None` for exact word identities).
    pub seed: Option<u64>,
}

impl ConditionReport {
    fn new(condition: &str, range: RangeInfo, seed: Option<u64>) -> Self {
        Self { condition: condition.into(), verdict: Verdict::Pass, range, checked: 0, witness: None, seed }
    }

    fn fail(&mut self, w: ConditionWitness) {
        self.verdict = Verdict::Fail;
        self.witness = Some(w);
    }

    /// True on a pass verdict.
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Verdicts for a list of conditions on one configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceReport {
    /// The configuration checked.
    pub subject: String,
    pub conditions: Vec<ConditionReport>,
}

impl CoherenceReport {
    /// True when every condition passed.
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(ConditionReport::passed)
    }

    /// Looks a condition up by name.
    pub fn condition(&self, name: &str) -> Option<&ConditionReport> {
        self.conditions.iter().find(|c| c.condition == name)
    }
}

impl fmt::Display for CoherenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.subject)?;
        for c in &self.conditions {
            let v = if c.passed() { "pass" } else { "fail" };
            write!(
                f,
                "\n  {}: {v} ({} identities, N = {}, L = {})",
                c.condition, c.checked, c.range.n_max, c.range.word_len
            )?;
            if let Some(w) = &c.witness {
                write!(f, "\n    n = {}", w.n)?;
                if let Some(np) = w.n_prime {
                    write!(f, ", n' = {np}")?;
                }
                if let Some(b) = &w.braid {
                    write!(f, ", braid {b}")?;
                }
                if let Some(g) = w.generator {
                    write!(f, ", g{g}")?;
                }
                write!(f, ": {}", w.detail)?;
                if let Some(c) = &w.certificate {
                    write!(f, " [{c}]")?;
                }
            }
        }
        Ok(())
    }
}

/// `b_{1,k}^{-1} ♮ id_n` on `1 + k + n` strands.
fn unbraid(k: usize, n: usize) -> BraidWord {
    braiding(1, k).inverse().extend(n)
}

/// The three coherence conditions, for levels up to `n_max` and braid words
/// of length `≤ max_len`:
/// * stability: `(b_{1,1}^{-1} ♮ id_n)(id_1 ♮ ς_n(g_i)) = ς_{n+1}(g_{i+1})(b_{1,1}^{-1} ♮ id_n)`
///   in `B_{n+2}` for `n < N` and every free generator (both sides are
///   homomorphic in `g` after conjugating by `b_{1,1}^{-1} ♮ id_n`, so
///   generators suffice);
/// * action compatibility: `(ι ∗ id)∘a_n(σ) = a_{n′}(id ♮ σ)∘(ι ∗ id)` and
///   `ι ∗ id = a_{n′}(ψ ♮ id_n)∘(ι ∗ id)`, exactly, for `n < n′ ≤ N`;
/// * semidirect: `(id_1 ♮ σ)ς_n(g_i) = ς_n(a_n(σ)(g_i))(id_1 ♮ σ)` in
///   `B_{n+1}` for `n ≤ N`.
///
/// Braid equalities are decided by symbolic Burau plus Lawrence–Krammer at
/// [`CERTAINTY`] points drawn from `seed`.
pub fn check_coherence(cfg: &LMConfig, n_max: usize, max_len: usize, seed: u64) -> Result<CoherenceReport, LmError> {
    let subject = cfg.name();
    let conditions = vec![
        check_stability(cfg, n_max, seed)?,
        check_action_compatibility(cfg, n_max, max_len)?,
        check_semidirect(cfg, n_max, max_len, seed)?,
    ];
    Ok(CoherenceReport { subject, conditions })
}

fn check_stability(cfg: &LMConfig, n_max: usize, seed: u64) -> Result<ConditionReport, LmError> {
    let mut rep = ConditionReport::new("stability", RangeInfo { n_max, word_len: 0 }, Some(seed));
    for n in 0..n_max {
        let oracle = BraidOracle::new(n + 2, CERTAINTY, seed);
        let b = unbraid(1, n);
        for i in 1..=n {
            let lhs = b.compose(&cfg.sigma.generator(n, i)?.shift_right(1))?;
            let rhs = cfg.sigma.generator(n + 1, i + 1)?.compose(&b)?;
            rep.checked += 1;
            let eq = oracle.equal(&lhs, &rhs)?;
            if !eq.equal {
                rep.fail(ConditionWitness {
                    n,
                    n_prime: Some(n + 1),
                    braid: None,
                    generator: Some(i),
                    detail: format!("{lhs} ≠ {rhs}"),
                    certificate: eq.witness,
                });
                return Ok(rep);
            }
        }
    }
    Ok(rep)
}

fn check_action_compatibility(cfg: &LMConfig, n_max: usize, max_len: usize) -> Result<ConditionReport, LmError> {
    let mut rep = ConditionReport::new("action compatibility", RangeInfo { n_max, word_len: max_len }, None);
    for n in 0..n_max {
        let sigmas = words_up_to(n, max_len);
        let actions = sigmas.iter().map(|s| cfg.action.word(s)).collect::<Result<Vec<_>, _>>()?;
        for n1 in n + 1..=n_max {
            let k = n1 - n;
            let incl = include_left(n, k);
            for (s, a) in sigmas.iter().zip(&actions) {
                rep.checked += 1;
                let lhs = incl.compose(a)?;
                let rhs = cfg.action.word(&s.shift_right(k))?.compose(&incl)?;
                if let Some(g) = lhs.first_difference(&rhs) {
                    rep.fail(map_witness(n, n1, s, g, &lhs, &rhs, "(ι∗id)∘a(σ) vs a(id♮σ)∘(ι∗id)"));
                    return Ok(rep);
                }
            }
            for psi in words_up_to(k, max_len) {
                rep.checked += 1;
                let rhs = cfg.action.word(&psi.extend(n))?.compose(&incl)?;
                if let Some(g) = incl.first_difference(&rhs) {
                    rep.fail(map_witness(n, n1, &psi, g, &incl, &rhs, "ι∗id vs a(ψ♮id)∘(ι∗id)"));
                    return Ok(rep);
                }
            }
        }
    }
    Ok(rep)
}

fn map_witness(
    n: usize,
    n1: usize,
    w: &BraidWord,
    g: usize,
    lhs: &FreeGroupMap,
    rhs: &FreeGroupMap,
    what: &str,
) -> ConditionWitness {
    ConditionWitness {
        n,
        n_prime: Some(n1),
        braid: Some(w.to_string()),
        generator: Some(g + 1),
        detail: format!("{what}: {} vs {}", lhs.image(g + 1), rhs.image(g + 1)),
        certificate: None,
    }
}

fn check_semidirect(cfg: &LMConfig, n_max: usize, max_len: usize, seed: u64) -> Result<ConditionReport, LmError> {
    let mut rep = ConditionReport::new("semidirect", RangeInfo { n_max, word_len: max_len }, Some(seed));
    for n in 1..=n_max {
        let oracle = BraidOracle::new(n + 1, CERTAINTY, seed);
        let images = (1..=n).map(|i| cfg.sigma.generator(n, i)).collect::<Result<Vec<_>, _>>()?;
        for s in words_up_to(n, max_len) {
            let a = cfg.action.word(&s)?;
            let shifted = s.shift_right(1);
            for i in 1..=n {
                rep.checked += 1;
                let lhs = shifted.compose(&images[i - 1])?;
                let rhs = sigma_eval(&cfg.sigma, a.image(i))?.compose(&shifted)?;
                let eq = oracle.equal(&lhs, &rhs)?;
                if !eq.equal {
                    rep.fail(ConditionWitness {
                        n,
                        n_prime: None,
                        braid: Some(s.to_string()),
                        generator: Some(i),
                        detail: format!("(id₁♮σ)ς(g) ≠ ς(a(σ)(g))(id₁♮σ) with a(σ)(g{i}) = {}", a.image(i)),
                        certificate: eq.witness,
                    });
                    return Ok(rep);
                }
            }
        }
    }
    Ok(rep)
}

/// The two reliability conditions, as exact word identities:
/// * braiding: `a_{1+n′}(b_{1,n′−n}^{-1} ♮ id_n)(g_{1+n′−n}) = g_1` for
///   `n ≤ n′ ≤ N` (the image of `g_1` under `(ι ∗ id)∘(id ∗ ι)`);
/// * stabilizer: `a_{n′}(id_{n′−n} ♮ σ)` fixes `g_1, …, g_{n′−n}` for braid
///   words `σ ∈ B_n` of length `≤ max_len`.
pub fn check_reliability(cfg: &LMConfig, n_max: usize, max_len: usize) -> Result<CoherenceReport, LmError> {
    let mut braid_rep = ConditionReport::new("reliability: braiding", RangeInfo { n_max, word_len: 0 }, None);
    'outer: for n in 0..=n_max {
        for n1 in n..=n_max {
            let k = n1 - n;
            let b = unbraid(k, n);
            braid_rep.checked += 1;
            let image = cfg.action.word(&b)?.apply_word(&FreeWord::generator(1 + n1, 1 + k)?)?;
            let expected = FreeWord::generator(1 + n1, 1)?;
            if image != expected {
                braid_rep.fail(ConditionWitness {
                    n,
                    n_prime: Some(n1),
                    braid: Some(b.to_string()),
                    generator: Some(1 + k),
                    detail: format!("image {image}, expected {expected}"),
                    certificate: None,
                });
                break 'outer;
            }
        }
    }
    let mut stab_rep = ConditionReport::new("reliability: stabilizer", RangeInfo { n_max, word_len: max_len }, None);
    'outer2: for n in 0..n_max {
        let sigmas = words_up_to(n, max_len);
        for n1 in n + 1..=n_max {
            let k = n1 - n;
            for s in &sigmas {
                let w = s.shift_right(k);
                let a = cfg.action.word(&w)?;
                stab_rep.checked += 1;
                if let Some(g) = (1..=k).find(|&g| a.image(g) != &FreeWord::generator(n1, g).expect("g ≤ n′")) {
                    stab_rep.fail(ConditionWitness {
                        n,
                        n_prime: Some(n1),
                        braid: Some(w.to_string()),
                        generator: Some(g),
                        detail: format!("g{g} ↦ {}", a.image(g)),
                        certificate: None,
                    });
                    break 'outer2;
                }
            }
        }
    }
    Ok(CoherenceReport { subject: cfg.name(), conditions: vec![braid_rep, stab_rep] })
}
