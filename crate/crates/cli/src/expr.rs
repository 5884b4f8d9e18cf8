//! Functor expressions: a small prefix grammar for built-ins and the
//! constructions on them.
//!
//! ```text
//! expr   := name | name "(" args ")"
//! built-ins:   constant | burau[(s)] | reduced-burau | tym[(s)] | lk
//!              | atomic(k) | t1 | e(l) | zero
//! constructions (arguments separated by ';'):
//!              sum(F; G) | tensor(F; G) | tau(k; F) | twist(y; F)
//!              | delta(F) | kappa(F) | lm(cfg; F)
//! cfg    := action "," sigma ["," pre "," post]     (use 1 for no twist)
//! ```
//!
//! For example `lm(artin,pure-braid,t,t^-1; constant)` is `t^{-1}LM₁(t𝔛)`.
//! An expression is built for a requested range; inner expressions are
//! built on the larger ranges their construction consumes.

use lmkit_braidcat::{BraidWord, SigmaFamily};
use lmkit_laurent::LaurentPoly;
use lmkit_longmoody::{lm_apply, ActionFamily, LMConfig};
use lmkit_polyfun::{delta, kappa};
use lmkit_repfun::{direct_sum, scalar_twist, tensor, translation, zero, BraidFunctor, Builtin};

use crate::error::CliError;

/// A parsed functor expression.
#[derive(Clone, Debug)]
pub enum Expr {
    Builtin(Builtin),
    Zero,
    Sum(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Tau(usize, Box<Expr>),
    Twist(LaurentPoly, Box<Expr>),
    Delta(Box<Expr>),
    Kappa(Box<Expr>),
    Lm(LMConfig, Box<Expr>),
}

/// Splits at top-level occurrences of `sep` (outside parentheses).
fn split_top(s: &str, sep: char) -> Result<Vec<&str>, CliError> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
        if depth < 0 {
            return Err(CliError::Usage(format!("unbalanced parentheses in {s:?}")));
        }
    }
    if depth != 0 {
        return Err(CliError::Usage(format!("unbalanced parentheses in {s:?}")));
    }
    parts.push(s[start..].trim());
    Ok(parts)
}

fn poly(s: &str) -> Result<LaurentPoly, CliError> {
    s.trim().parse().map_err(|e| CliError::Usage(format!("bad polynomial {s:?}: {e}")))
}

/// The ς family by name: `pure-braid`, `trivial`, or `corrupted` (the pure
/// braid family with `ς(g_1)` replaced by `σ_1`, a negative control that
/// violates the coherence conditions).
pub fn sigma_by_name(name: &str) -> Result<SigmaFamily, CliError> {
    if name == "corrupted" {
        return Ok(SigmaFamily::custom("corrupted", |n, i| {
            if i == 1 {
                BraidWord::new(n + 1, &[1]).expect("σ_1 on n + 1 ≥ 2 strands")
            } else {
                SigmaFamily::pure_braid().generator(n, i).expect("valid generator")
            }
        }));
    }
    SigmaFamily::by_name(name).ok_or_else(|| CliError::Usage(format!("unknown sigma family {name:?}")))
}

/// An [`LMConfig`] from its parts; a twist of `1` (or none) means no twist.
pub fn config(action: &str, sigma: &str, pre: Option<&str>, post: Option<&str>) -> Result<LMConfig, CliError> {
    let mut cfg = LMConfig::new(ActionFamily::parse(action)?, sigma_by_name(sigma)?);
    if let Some(y) = pre.map(poly).transpose()?.filter(|y| !y.is_one()) {
        cfg = cfg.with_pre_twist(y)?;
    }
    if let Some(y) = post.map(poly).transpose()?.filter(|y| !y.is_one()) {
        cfg = cfg.with_post_scale(y)?;
    }
    Ok(cfg)
}

/// Parses `action,sigma[,pre,post]`.
pub fn parse_config(s: &str) -> Result<LMConfig, CliError> {
    let parts = split_top(s, ',')?;
    match parts.as_slice() {
        [a, s] => config(a, s, None, None),
        [a, s, pre, post] => config(a, s, Some(pre), Some(post)),
        _ => Err(CliError::Usage(format!("bad configuration {s:?}: expected action,sigma[,pre,post]"))),
    }
}

impl Expr {
    /// Parses an expression.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(i) => {
                let inner = s[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| CliError::Usage(format!("expected ')' at the end of {s:?}")))?;
                (s[..i].trim(), Some(inner))
            }
            None => (s, None),
        };
        let args = args.map(|a| split_top(a, ';')).transpose()?;
        let sub = |e: &str| Expr::parse(e).map(Box::new);
        let usize_arg = |a: &str| a.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad integer {a:?}")));
        Ok(match (name, args.as_deref()) {
            ("zero", None) => Expr::Zero,
            ("sum", Some([f, g])) => Expr::Sum(sub(f)?, sub(g)?),
            ("tensor", Some([f, g])) => Expr::Tensor(sub(f)?, sub(g)?),
            ("tau", Some([k, f])) => Expr::Tau(usize_arg(k)?, sub(f)?),
            ("twist", Some([y, f])) => Expr::Twist(poly(y)?, sub(f)?),
            ("delta", Some([f])) => Expr::Delta(sub(f)?),
            ("kappa", Some([f])) => Expr::Kappa(sub(f)?),
            ("lm", Some([cfg, f])) => Expr::Lm(parse_config(cfg)?, sub(f)?),
            ("sum" | "tensor" | "tau" | "twist" | "delta" | "kappa" | "lm", _) => {
                return Err(CliError::Usage(format!("wrong arguments in {s:?}")));
            }
            (name, args) => {
                let params = match args {
                    None => Vec::new(),
                    Some([a]) => split_top(a, ',')?,
                    Some(_) => return Err(CliError::Usage(format!("wrong arguments in {s:?}"))),
                };
                Expr::Builtin(Builtin::parse(name, &params)?)
            }
        })
    }

    /// The functor, defined at least on levels `0..=range`.
    pub fn build(&self, range: usize) -> Result<BraidFunctor, CliError> {
        Ok(match self {
            Expr::Builtin(b) => b.functor(range),
            Expr::Zero => zero(range),
            Expr::Sum(f, g) => direct_sum(&f.build(range)?, &g.build(range)?),
            Expr::Tensor(f, g) => tensor(&f.build(range)?, &g.build(range)?),
            Expr::Tau(k, f) => translation(*k, &f.build(range + k)?),
            Expr::Twist(y, f) => scalar_twist(y, &f.build(range)?)?,
            Expr::Delta(f) => delta(&f.build(range + 1)?, range)?,
            Expr::Kappa(f) => kappa(&f.build(range + 1)?, range)?,
            Expr::Lm(cfg, f) => lm_apply(cfg, &f.build(range + 1)?)?,
        })
    }
}

/// Parses and builds in one step.
pub fn functor(expr: &str, range: usize) -> Result<BraidFunctor, CliError> {
    Expr::parse(expr)?.build(range)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_and_parameters() {
        assert_eq!(functor("burau", 3).unwrap().name(), "burau(t)");
        assert_eq!(functor("burau(t^2)", 3).unwrap().name(), "burau(t^2)");
        assert_eq!(functor("atomic(2)", 3).unwrap().dim(2).unwrap(), 1);
        assert!(functor("burau(1 + t)", 3).is_err());
        assert!(functor("nonsense", 3).is_err());
    }

    #[test]
    fn nested_constructions_have_the_requested_range() {
        for e in [
            "lm(artin,pure-braid,t,t^-1; constant)",
            "delta(lm(artin,pure-braid; burau))",
            "tau(2; kappa(lk))",
            "sum(t1; tensor(burau; tym(-1)))",
            "twist(t; lm(wada3,trivial; burau))",
        ] {
            let f = functor(e, 4).unwrap();
            assert_eq!(f.eval_range(), 4, "{e}");
        }
    }

    #[test]
    fn lm_name_round_trips_through_the_grammar() {
        let f = functor("lm(artin,pure-braid,t,t^-1; constant)", 3).unwrap();
        assert_eq!(f.name(), "lm(artin,pure-braid,t,t^-1; constant)");
        let g = functor("lm(artin,pure-braid,1,1; constant)", 3).unwrap();
        assert_eq!(g.name(), "lm(artin,pure-braid; constant)");
    }

    #[test]
    fn malformed_expressions() {
        for e in ["lm(artin; constant)", "sum(burau)", "burau(t", "delta(burau; lk)", "lm(artin,nope; constant)"] {
            assert!(Expr::parse(e).is_err(), "{e}");
        }
    }
}
