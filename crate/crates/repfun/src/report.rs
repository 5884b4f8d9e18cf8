//! Check reports shared by every verifier.

use std::fmt;

use lmkit_laurent::PolyMatrix;
use serde::Serialize;

/// One violated identity, located as precisely as possible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Which identity failed (e.g. `"braid relation"`, `"intertwining"`).
    pub relation: String,
    /// Level `n` at which it failed.
    pub level: usize,
    /// Second level `n′` for identities involving stabilizations.
    pub target_level: Option<usize>,
    /// The words or generators involved, in text form.
    pub words: Vec<String>,
    /// First differing matrix entry, when the identity is a matrix equality.
    pub entry: Option<(usize, usize)>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at n = {}", self.relation, self.level)?;
        if let Some(np) = self.target_level {
            write!(f, ", n' = {np}")?;
        }
        if !self.words.is_empty() {
            write!(f, " [{}]", self.words.join(" | "))?;
        }
        if let Some((r, c)) = self.entry {
            write!(f, " entry ({r}, {c})")?;
        }
        Ok(())
    }
}

/// The outcome of a range-bounded verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    /// Name of the check.
    pub check: String,
    /// What was checked (functor or configuration name).
    pub subject: String,
    /// Largest level examined.
    pub range: usize,
    /// Word-length bound, when words were enumerated.
    pub max_len: Option<usize>,
    /// Number of identities verified.
    pub checked: usize,
    /// Every violated identity.
    pub violations: Vec<Violation>,
}

impl CheckReport {
    /// An empty report.
    pub fn new(check: &str, subject: &str, range: usize, max_len: Option<usize>) -> Self {
        Self { check: check.into(), subject: subject.into(), range, max_len, checked: 0, violations: Vec::new() }
    }

    /// True when no identity was violated.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records the comparison `lhs = rhs`.
    pub fn compare(
        &mut self,
        relation: &str,
        level: usize,
        target_level: Option<usize>,
        words: &[String],
        lhs: &PolyMatrix,
        rhs: &PolyMatrix,
    ) {
        self.checked += 1;
        if let Some(entry) = lhs.first_difference(rhs) {
            self.violations.push(Violation {
                relation: relation.into(),
                level,
                target_level,
                words: words.to_vec(),
                entry: Some(entry),
            });
        }
    }

    /// Records a boolean condition.
    pub fn require(&mut self, ok: bool, relation: &str, level: usize, target_level: Option<usize>, words: &[String]) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                relation: relation.into(),
                level,
                target_level,
                words: words.to_vec(),
                entry: None,
            });
        }
    }

    /// Appends another report's counts and violations.
    pub fn absorb(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "fail" };
        write!(f, "{} {}: {verdict} ({} identities, range {}", self.check, self.subject, self.checked, self.range)?;
        if let Some(l) = self.max_len {
            write!(f, ", words ≤ {l}")?;
        }
        write!(f, ")")?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}
