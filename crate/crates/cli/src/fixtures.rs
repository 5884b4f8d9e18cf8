//! Displayed generator matrices with recorded orientation flags.
//!
//! The flag of each fixture was fixed once, by checking which orientation
//! agrees with the computed matrices; tests also confirm that the opposite
//! orientation disagrees whenever the display is not symmetric.

use lmkit_laurent::{LaurentPoly, PolyMatrix};
use lmkit_repfun::CheckReport;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::expr::functor;

/// The bundled fixture file.
pub const DISPLAYS: &str = include_str!("../../../fixtures/displays.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    AsDisplayed,
    Transposed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Placement {
    /// `Id_{i−1} ⊕ B ⊕ Id_{n−i−1}` for all `2 ≤ n ≤ max_level`, `1 ≤ i < n`.
    Sliding { max_level: usize },
    /// The whole matrix of one generator at one level.
    Exact { level: usize, generator: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DisplayFixture {
    pub id: String,
    /// A functor expression.
    pub functor: String,
    pub display: Vec<Vec<String>>,
    pub orientation: Orientation,
    pub placement: Placement,
}

#[derive(Deserialize)]
struct FixtureFile {
    fixtures: Vec<DisplayFixture>,
}

/// Loads the bundled fixtures.
pub fn load() -> Result<Vec<DisplayFixture>, CliError> {
    Ok(serde_json::from_str::<FixtureFile>(DISPLAYS)?.fixtures)
}

impl DisplayFixture {
    /// The display as a matrix.
    pub fn matrix(&self) -> Result<PolyMatrix, CliError> {
        let rows = self
            .display
            .iter()
            .map(|r| r.iter().map(|e| e.parse::<LaurentPoly>()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let cols = rows.first().map_or(0, Vec::len);
        Ok(PolyMatrix::from_rows(rows, cols)?)
    }

    /// Compares the computed generators with the display read in the given
    /// orientation.
    pub fn check_with(&self, orientation: Orientation) -> Result<CheckReport, CliError> {
        let shown = self.matrix()?;
        let block = match orientation {
            Orientation::AsDisplayed => shown,
            Orientation::Transposed => shown.transpose(),
        };
        let cases: Vec<(usize, usize)> = match self.placement {
            Placement::Sliding { max_level } => (2..=max_level).flat_map(|n| (1..n).map(move |i| (n, i))).collect(),
            Placement::Exact { level, generator } => vec![(level, generator)],
        };
        let max_level = cases.iter().map(|&(n, _)| n).max().unwrap_or(0);
        let f = functor(&self.functor, max_level)?;
        let mut report = CheckReport::new("display", &self.id, max_level, None);
        for (n, i) in cases {
            let expected = match self.placement {
                Placement::Sliding { .. } => {
                    let k = block.rows();
                    PolyMatrix::identity(i - 1).direct_sum(&block).direct_sum(&PolyMatrix::identity(n + 1 - i - k))
                }
                Placement::Exact { .. } => block.clone(),
            };
            report.compare("displayed generator", n, None, &[format!("s{i}")], &f.generator(n, i as i64)?, &expected);
        }
        Ok(report)
    }

    /// [`DisplayFixture::check_with`] under the recorded flag.
    pub fn check(&self) -> Result<CheckReport, CliError> {
        self.check_with(self.orientation)
    }

    /// The opposite flag.
    pub fn opposite(&self) -> Orientation {
        match self.orientation {
            Orientation::AsDisplayed => Orientation::Transposed,
            Orientation::Transposed => Orientation::AsDisplayed,
        }
    }

    /// True when the display equals its transpose (the flag is then moot).
    pub fn is_symmetric(&self) -> Result<bool, CliError> {
        let m = self.matrix()?;
        Ok(m == m.transpose())
    }
}
