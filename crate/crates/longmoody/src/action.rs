//! Families of braid actions `a_n: B_n → Aut(F_n)`.

use std::fmt;
use std::sync::Arc;

use lmkit_braidcat::BraidWord;
use lmkit_freegroup::{artin_action, wada_action, FreeGroupMap, FreeWord};

use crate::error::LmError;

type Rule = dyn Fn(usize, i64) -> Result<FreeGroupMap, LmError> + Send + Sync;

/// A family of actions given on signed Artin generators and extended
/// multiplicatively to braid words.
#[derive(Clone)]
pub enum ActionFamily {
    /// The Artin action.
    Artin,
    /// The Wada-type action of the given kind (`m` is used by kind 1 only).
    Wada { kind: u8, m: i64 },
    /// An explicit rule `(n, signed generator) ↦ automorphism of F_n`.
    Custom { name: String, rule: Arc<Rule> },
}

impl fmt::Debug for ActionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl ActionFamily {
    /// Parses `artin`, `wada<k>` (e.g. `wada3`) or `wada1:<m>`.
    pub fn parse(s: &str) -> Result<Self, LmError> {
        let bad = || LmError::Config(format!("unknown action {s:?}"));
        if s == "artin" {
            return Ok(ActionFamily::Artin);
        }
        let rest = s.strip_prefix("wada").ok_or_else(bad)?;
        let (kind, m) = match rest.split_once(':') {
            Some((k, m)) => (k, m.parse::<i64>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let kind: u8 = kind.parse().map_err(|_| bad())?;
        if !(1..=7).contains(&kind) {
            return Err(bad());
        }
        Ok(ActionFamily::Wada { kind, m })
    }

    /// An explicit family.
    pub fn custom(
        name: &str,
        rule: impl Fn(usize, i64) -> Result<FreeGroupMap, LmError> + Send + Sync + 'static,
    ) -> Self {
        ActionFamily::Custom { name: name.into(), rule: Arc::new(rule) }
    }

    /// The Artin action conjugated by the inner automorphism `x ↦ g_n x g_n^{-1}`
    /// of `F_n`. It is a genuine braid action, but it moves generators that
    /// the Artin action of `id_k ♮ σ` fixes (a negative control for the
    /// stabilizer condition).
    pub fn conjugated_artin() -> Self {
        Self::custom("conjugated-artin", |n, gen| {
            let a = artin_action(n, gen)?;
            let (c, c_inv) = inner(n, 1)?;
            Ok(c.compose(&a)?.compose(&c_inv)?)
        })
    }

    /// Display name.
    pub fn name(&self) -> String {
        match self {
            ActionFamily::Artin => "artin".into(),
            ActionFamily::Wada { kind: 1, m } if *m != 1 => format!("wada1:{m}"),
            ActionFamily::Wada { kind, .. } => format!("wada{kind}"),
            ActionFamily::Custom { name, .. } => name.clone(),
        }
    }

    /// `a_n(σ_i^{±1})`.
    pub fn generator(&self, n: usize, gen: i64) -> Result<FreeGroupMap, LmError> {
        match self {
            ActionFamily::Artin => Ok(artin_action(n, gen)?),
            ActionFamily::Wada { kind, m } => Ok(wada_action(*kind, *m, n, gen)?),
            ActionFamily::Custom { rule, .. } => rule(n, gen),
        }
    }

    /// `a_n(σ)` for a braid word (composition in written order).
    pub fn word(&self, w: &BraidWord) -> Result<FreeGroupMap, LmError> {
        let mut out = FreeGroupMap::identity(w.strands());
        for &l in w.letters() {
            out = out.compose(&self.generator(w.strands(), l)?)?;
        }
        Ok(out)
    }

    /// The first pair `(i, j)` of Artin generators on `n` strands whose
    /// relation (`σ_iσ_jσ_i = σ_jσ_iσ_j` for `|i − j| = 1`, commutation
    /// otherwise, `σ_iσ_i^{-1} = 1` for `i = j`) fails as maps of `F_n`.
    pub fn relation_violation(&self, n: usize) -> Result<Option<(usize, usize)>, LmError> {
        let gen = |l: i64| self.generator(n, l);
        for i in 1..n {
            let a = gen(i as i64)?;
            if !a.compose(&gen(-(i as i64))?)?.is_identity() {
                return Ok(Some((i, i)));
            }
            for j in i + 1..n {
                let b = gen(j as i64)?;
                let (lhs, rhs) = if j == i + 1 {
                    (a.compose(&b)?.compose(&a)?, b.compose(&a)?.compose(&b)?)
                } else {
                    (a.compose(&b)?, b.compose(&a)?)
                };
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}

/// Conjugation by `g_n^{e}` on `F_n` and its inverse (identity on `F_0`).
fn inner(n: usize, e: i64) -> Result<(FreeGroupMap, FreeGroupMap), LmError> {
    if n == 0 {
        return Ok((FreeGroupMap::identity(0), FreeGroupMap::identity(0)));
    }
    let conj = |e: i64| -> Result<FreeGroupMap, LmError> {
        let c = FreeWord::from_syllables(n, &[(n, e)])?;
        let images =
            (1..=n).map(|i| c.mul(&FreeWord::generator(n, i)?)?.mul(&c.inv())).collect::<Result<Vec<_>, _>>()?;
        Ok(FreeGroupMap::new(n, n, images)?)
    };
    Ok((conj(e)?, conj(-e)?))
}
