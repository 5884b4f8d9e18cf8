//! The `lmkit` command line: emission of functor matrices, checks of the
//! functor criterion, coherence, reliability and naturality, application of
//! the Long-Moody functor, degree estimation and theorem verification.
//!
//! Every run is determined by its arguments and the seed, and prints the
//! JSON (or text) form of the owning module's report. Exit codes: 0 pass,
//! 1 check failure (the report carries the witness), 2 usage or
//! configuration error.

pub mod error;
pub mod expr;
pub mod fixtures;

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lmkit_laurent::PolyMatrix;
use lmkit_longmoody::{
    check_burau_equivalence, check_coherence, check_reliability, check_xi_lemma, lm_apply, trivial_sigma_factorization,
    ActionFamily, Intertwiner, LMConfig,
};
use lmkit_polyfun::{
    estimate_strong_degree, rank_one_isomorphism, verify_degree_theorems, verify_splitting_theorem, DegreeTheoremReport,
};
use lmkit_repfun::{check_functor_criterion, check_natural, BraidFunctor, FunctorDump, NaturalMap};
use serde::Serialize;
use serde_json::Value;

pub use error::CliError;
use expr::{config, functor};

const GRAMMAR: &str = "\
Functor expressions (--functor, --base, --source, --target):

  built-ins     constant | burau[(s)] | reduced-burau | tym[(s)] | lk
                | atomic(k) | t1 | e(l) | zero
  constructions sum(F; G) | tensor(F; G) | tau(k; F) | twist(y; F)
                | delta(F) | kappa(F) | lm(cfg; F)
  cfg           action,sigma[,pre,post]   (1 means no twist)

Actions: artin, wada1 .. wada7, wada1:m (first kind with parameter m). Sigma
families: pure-braid, trivial, corrupted (a negative control). Polynomials use
the grammar 1 - t, t^-1, 2*t^2*q, ...

Example: lm(artin,pure-braid,t,t^-1; constant) is t^-1 LM(t X).

Exit codes: 0 pass, 1 check failure (with witness), 2 usage error.";

/// Top-level arguments.
#[derive(Debug, Parser)]
#[command(name = "lmkit", version, about = "Long-Moody functors and polynomiality, computed exactly", after_long_help = GRAMMAR)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for evaluation points.
    #[arg(long, global = true, env = "LMKIT_SEED", default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump the dimension, generator matrices and stabilization of one level.
    Emit {
        #[arg(long)]
        functor: String,
        #[arg(long = "n", visible_alias = "N")]
        n: usize,
    },
    /// Run a range-bounded check.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// Apply the Long-Moody functor (possibly iterated) and emit one level.
    Lm {
        #[command(flatten)]
        cfg: CfgArgs,
        #[arg(long, default_value = "constant")]
        base: String,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
        #[arg(long = "n", visible_alias = "N")]
        n: usize,
    },
    /// Estimate the strong and very strong degree on levels <= N.
    Degree {
        #[arg(long)]
        functor: String,
        #[arg(long = "N", visible_alias = "n", default_value_t = 8)]
        n_max: usize,
        #[arg(long = "d-max", default_value_t = 3)]
        d_max: usize,
    },
    /// Verify a theorem on a finite range.
    Verify {
        #[command(subcommand)]
        theorem: VerifyKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckKind {
    /// Relations, stabilization composition, intertwining and retractions.
    Functor {
        #[arg(long)]
        functor: String,
        #[arg(long = "N", visible_alias = "n", default_value_t = 5)]
        n_max: usize,
        #[arg(long = "L", default_value_t = 3)]
        max_len: usize,
    },
    /// Stability, action compatibility and semidirect conditions.
    Coherence {
        #[command(flatten)]
        cfg: CfgArgs,
        #[arg(long = "N", visible_alias = "n", default_value_t = 5)]
        n_max: usize,
        #[arg(long = "L", default_value_t = 4)]
        max_len: usize,
    },
    /// The two reliability conditions.
    Reliability {
        #[command(flatten)]
        cfg: CfgArgs,
        #[arg(long = "N", visible_alias = "n", default_value_t = 5)]
        n_max: usize,
        #[arg(long = "L", default_value_t = 4)]
        max_len: usize,
    },
    /// Naturality of a map between two functors.
    Natural {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = MapKind::Identity)]
        map: MapKind,
        #[arg(long = "N", visible_alias = "n", default_value_t = 5)]
        n_max: usize,
    },
}

/// Candidate natural maps for `check natural`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    /// Identity components (source and target must agree levelwise).
    Identity,
    /// Scalar components propagated along the stabilizations (functors of
    /// dimension at most one).
    RankOne,
}

#[derive(Debug, Subcommand)]
pub enum VerifyKind {
    /// The translation splitting, the ξ′ lemma and the identifications of
    /// δ₁ and κ₁ of LM(F).
    Splitting {
        #[command(flatten)]
        cfg: CfgArgs,
        #[arg(long, default_value = "constant")]
        base: String,
        #[arg(long = "N", visible_alias = "n", default_value_t = 4)]
        n_max: usize,
    },
    /// Degree growth under LM and invariance under translation.
    Degree {
        #[command(flatten)]
        cfg: CfgArgs,
        #[arg(long, default_value = "constant")]
        base: String,
        #[arg(long = "N", visible_alias = "n", default_value_t = 5)]
        n_max: usize,
        #[arg(long = "d-max", default_value_t = 2)]
        d_max: usize,
    },
    /// Conjugation of the twisted LM of the constant functor to Burau at t².
    BurauEquivalence {
        #[arg(long = "N", visible_alias = "n", default_value_t = 6)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = IntertwinerArg::Reversal)]
        intertwiner: IntertwinerArg,
    },
    /// ξ′ ∘ LM(i₁) = i₁LM.
    XiLemma {
        #[command(flatten)]
        cfg: CfgArgs,
        #[arg(long, default_value = "constant")]
        base: String,
        #[arg(long = "N", visible_alias = "n", default_value_t = 4)]
        n_max: usize,
    },
    /// LM(F) = LM(X) ⊗ τ₁F for a trivial ς family.
    Factorization {
        #[arg(long, default_value = "artin")]
        action: String,
        #[arg(long, default_value = "burau")]
        base: String,
        #[arg(long = "N", visible_alias = "n", default_value_t = 4)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IntertwinerArg {
    /// The order reversal alone.
    Reversal,
    /// The order reversal followed by the inverse half twist.
    HalfTwist,
}

/// The Long-Moody configuration flags.
#[derive(Clone, Debug, Args)]
pub struct CfgArgs {
    #[arg(long, default_value = "artin")]
    pub action: String,
    /// Defaults to pure-braid for artin and trivial otherwise.
    #[arg(long)]
    pub sigma: Option<String>,
    #[arg(long)]
    pub pre: Option<String>,
    #[arg(long)]
    pub post: Option<String>,
}

impl CfgArgs {
    pub fn config(&self) -> Result<LMConfig, CliError> {
        let sigma = self.sigma.as_deref().unwrap_or(if self.action == "artin" { "pure-braid" } else { "trivial" });
        config(&self.action, sigma, self.pre.as_deref(), self.post.as_deref())
    }
}

/// The result of a run: a report in both forms and its verdict.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Outcome {
    fn report<R: Serialize + fmt::Display>(r: &R, passed: bool) -> Result<Self, CliError> {
        let mut json = serde_json::to_value(r)?;
        if let Value::Object(m) = &mut json {
            m.insert("verdict".into(), Value::from(if passed { "pass" } else { "fail" }));
        }
        Ok(Self { text: r.to_string(), json, passed })
    }

    fn dump(d: &FunctorDump) -> Result<Self, CliError> {
        Ok(Self { text: dump_text(d), json: serde_json::to_value(d)?, passed: true })
    }

    /// The rendered output (pretty JSON or text), newline-terminated.
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        Ok(match format {
            Format::Json => serde_json::to_string_pretty(&self.json)? + "\n",
            Format::Text => self.text.clone() + "\n",
        })
    }

    /// The process exit code for a completed run.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn matrix_text(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| format!("    [{}]", r.join(", "))).collect::<Vec<_>>().join("\n")
}

fn dump_text(d: &FunctorDump) -> String {
    let mut s = format!("{} at n = {}: dimension {}", d.name, d.n, d.dim);
    for (g, m) in &d.generators {
        s += &format!("\n  {g}:\n{}", matrix_text(m));
    }
    for (to, m) in &d.stab_to {
        s += &format!("\n  stab to {to}:\n{}", matrix_text(m));
    }
    s
}

/// Text form of a [`DegreeTheoremReport`]; serializes as the report itself.
#[derive(Serialize)]
struct TheoremView<'a>(&'a DegreeTheoremReport);

impl fmt::Display for TheoremView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0;
        write!(
            f,
            "degree theorems for {} on levels <= {}: {}",
            r.subject,
            r.range,
            if r.passed() { "pass" } else { "fail" }
        )?;
        write!(f, "\n  F: {}\n  LM(F): {}", r.base, r.lm)?;
        for (k, t) in &r.translations {
            write!(f, "\n  tau_{k}: {t}")?;
        }
        write!(f, "\n  {}", r.atomic_translation)?;
        for e in &r.failures {
            write!(f, "\n  failure: {e}")?;
        }
        Ok(())
    }
}

fn identity_map(source: &BraidFunctor, target: &BraidFunctor, n_max: usize) -> Result<NaturalMap, CliError> {
    for n in 0..=n_max {
        let (a, b) = (source.dim(n)?, target.dim(n)?);
        if a != b {
            return Err(CliError::Usage(format!("identity map needs equal dimensions; level {n} has {a} and {b}")));
        }
    }
    let s = source.clone();
    Ok(NaturalMap::new("identity", source, target, move |n| Ok(PolyMatrix::identity(s.dim(n)?))))
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Emit { functor: e, n } => Outcome::dump(&functor(e, n + 1)?.dump(*n)?),
        Command::Lm { cfg, base, iterations, n } => {
            let cfg = cfg.config()?;
            let mut f = functor(base, n + 1 + iterations)?;
            for _ in 0..*iterations {
                f = lm_apply(&cfg, &f)?;
            }
            Outcome::dump(&f.dump(*n)?)
        }
        Command::Check { kind } => match kind {
            CheckKind::Functor { functor: e, n_max, max_len } => {
                let r = check_functor_criterion(&functor(e, *n_max)?, *n_max, *max_len)?;
                Outcome::report(&r, r.passed())
            }
            CheckKind::Coherence { cfg, n_max, max_len } => {
                let r = check_coherence(&cfg.config()?, *n_max, *max_len, cli.seed)?;
                Outcome::report(&r, r.passed())
            }
            CheckKind::Reliability { cfg, n_max, max_len } => {
                let r = check_reliability(&cfg.config()?, *n_max, *max_len)?;
                Outcome::report(&r, r.passed())
            }
            CheckKind::Natural { source, target, map, n_max } => {
                let (s, t) = (functor(source, *n_max)?, functor(target, *n_max)?);
                let eta = match map {
                    MapKind::Identity => identity_map(&s, &t, *n_max)?,
                    MapKind::RankOne => rank_one_isomorphism(&s, &t, *n_max)?,
                };
                let r = check_natural(&eta, *n_max)?;
                Outcome::report(&r, r.passed())
            }
        },
        Command::Degree { functor: e, n_max, d_max } => {
            let r = estimate_strong_degree(&functor(e, n_max + d_max + 2)?, *n_max, *d_max)?;
            Outcome::report(&r, r.concluded())
        }
        Command::Verify { theorem } => match theorem {
            VerifyKind::Splitting { cfg, base, n_max } => {
                let r = verify_splitting_theorem(&cfg.config()?, &functor(base, n_max + 2)?, *n_max)?;
                Outcome::report(&r, r.passed())
            }
            VerifyKind::Degree { cfg, base, n_max, d_max } => {
                let r = verify_degree_theorems(&cfg.config()?, &functor(base, n_max + d_max + 4)?, *n_max, *d_max)?;
                Outcome::report(&TheoremView(&r), r.passed())
            }
            VerifyKind::BurauEquivalence { n_max, intertwiner } => {
                let kind = match intertwiner {
                    IntertwinerArg::Reversal => Intertwiner::Reversal,
                    IntertwinerArg::HalfTwist => Intertwiner::ReversalAndHalfTwist,
                };
                let r = check_burau_equivalence(kind, *n_max)?;
                Outcome::report(&r, r.passed())
            }
            VerifyKind::XiLemma { cfg, base, n_max } => {
                let r = check_xi_lemma(&cfg.config()?, &functor(base, n_max + 2)?, *n_max)?;
                Outcome::report(&r, r.passed())
            }
            VerifyKind::Factorization { action, base, n_max } => {
                let r = trivial_sigma_factorization(&ActionFamily::parse(action)?, &functor(base, n_max + 1)?, *n_max)?;
                Outcome::report(&r, r.passed())
            }
        },
    }
}
