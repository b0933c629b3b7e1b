//! Conformance suites and their reports.
//!
//! Every suite is a list of independent jobs; jobs run on the rayon pool
//! and the report keeps their declaration order, so repeated runs with the
//! same configuration serialize to identical bytes.

mod anchors;
mod audit;
mod cases;
mod numeric_suite;
mod spectrum;
mod structure;

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conformance::{ConformanceCase, Verdict};
use crate::error::ReportError;
use crate::numeric::NumericConfig;
use crate::states::DEFAULT_MAX_LEVEL;

pub use spectrum::{spectrum_table, OmegaMode, SpectrumRow, SpectrumTable};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteName {
    Algebra,
    Star,
    Jacobi,
    Leibniz,
    States,
    Spectra,
    AppendixA,
    AppendixB,
    MatrixBasis,
    Numeric,
    Associator,
}

impl SuiteName {
    pub const ALL: [SuiteName; 11] = [
        SuiteName::Algebra,
        SuiteName::Star,
        SuiteName::Jacobi,
        SuiteName::Leibniz,
        SuiteName::States,
        SuiteName::Spectra,
        SuiteName::AppendixA,
        SuiteName::AppendixB,
        SuiteName::MatrixBasis,
        SuiteName::Numeric,
        SuiteName::Associator,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Algebra => "algebra",
            SuiteName::Star => "star",
            SuiteName::Jacobi => "jacobi",
            SuiteName::Leibniz => "leibniz",
            SuiteName::States => "states",
            SuiteName::Spectra => "spectra",
            SuiteName::AppendixA => "appendix_a",
            SuiteName::AppendixB => "appendix_b",
            SuiteName::MatrixBasis => "matrix_basis",
            SuiteName::Numeric => "numeric",
            SuiteName::Associator => "associator",
        }
    }

    /// Suites whose failures make the run fail. The others audit printed
    /// formulas and record whatever they find.
    pub fn required(self) -> bool {
        matches!(
            self,
            SuiteName::Algebra | SuiteName::Star | SuiteName::Jacobi | SuiteName::MatrixBasis | SuiteName::Numeric
        )
    }
}

impl FromStr for SuiteName {
    type Err = ReportError;
    fn from_str(s: &str) -> Result<Self, ReportError> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s || n.as_str().replace('_', "-") == s)
            .ok_or_else(|| ReportError::UnknownSuite(s.to_string()))
    }
}

impl std::fmt::Display for SuiteName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Highest ladder level audited by the states and spectra suites.
    pub max_level: u32,
    pub seed: u64,
    /// Draws per random property case.
    pub samples: usize,
    pub numeric: NumericConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { max_level: 8, seed: Self::DEFAULT_SEED, samples: 200, numeric: NumericConfig::default() }
    }
}

impl RunConfig {
    pub const DEFAULT_SEED: u64 = 0x7157_ed00;

    pub fn validate(&self) -> Result<(), ReportError> {
        if self.max_level > DEFAULT_MAX_LEVEL {
            return Err(ReportError::BadConfig(format!("max_level {} exceeds {DEFAULT_MAX_LEVEL}", self.max_level)));
        }
        if self.samples == 0 {
            return Err(ReportError::BadConfig("samples must be positive".into()));
        }
        self.numeric.validate().map_err(|e| ReportError::BadConfig(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
    pub total: usize,
}

impl Summary {
    fn of(cases: &[ConformanceCase]) -> Self {
        let count = |v| cases.iter().filter(|c| c.status == v).count();
        Self { pass: count(Verdict::Pass), fail: count(Verdict::Fail), info: count(Verdict::Info), total: cases.len() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: SuiteName,
    pub required: bool,
    pub engine_version: String,
    pub seed: u64,
    pub config: RunConfig,
    pub cases: Vec<ConformanceCase>,
    pub summary: Summary,
}

impl Report {
    /// True when this suite must pass and some case failed.
    pub fn blocks(&self) -> bool {
        self.required && self.summary.fail > 0
    }

    pub fn case(&self, id: &str) -> Option<&ConformanceCase> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let kind = if self.required { "required" } else { "audit" };
        let _ = writeln!(out, "suite {} ({kind}), engine {}, seed {}", self.suite, self.engine_version, self.seed);
        for c in &self.cases {
            let _ = writeln!(out, "{:<4}  {}  [{}]", c.status.as_str(), c.id, c.paper_anchor);
            if let Some(n) = &c.numeric {
                let _ = writeln!(
                    out,
                    "      expected {:.12e}{:+.12e}i  actual {:.12e}{:+.12e}i  abs {:.3e}  tol {:.1e}{}",
                    n.expected[0],
                    n.expected[1],
                    n.actual[0],
                    n.actual[1],
                    n.abs_error,
                    n.tolerance,
                    n.nodes.map(|k| format!("  nodes {k}")).unwrap_or_default()
                );
            }
            if c.status != Verdict::Pass {
                if let Some(r) = &c.residual_text {
                    let _ = writeln!(out, "      residual: {r}");
                }
            }
            if let Some(note) = &c.note {
                let _ = writeln!(out, "      note: {note}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "summary: {} pass, {} fail, {} info ({} cases)", s.pass, s.fail, s.info, s.total);
        out
    }
}

/// Runs one suite.
pub fn run_suite(name: SuiteName, config: &RunConfig) -> Result<Report, ReportError> {
    config.validate()?;
    let jobs = match name {
        SuiteName::Algebra => structure::algebra(config),
        SuiteName::Star => structure::star_suite(config),
        SuiteName::Jacobi => structure::jacobi(),
        SuiteName::Leibniz => structure::leibniz(config),
        SuiteName::Associator => structure::associator_suite(config),
        SuiteName::States => audit::states(config),
        SuiteName::Spectra => audit::spectra(config),
        SuiteName::AppendixA => audit::appendix_a(),
        SuiteName::AppendixB => audit::appendix_b(),
        SuiteName::MatrixBasis => audit::matrix_basis(config),
        SuiteName::Numeric => numeric_suite::numeric(config),
    };
    let mut cases: Vec<ConformanceCase> = jobs.par_iter().map(|job| job()).flatten_iter().collect();
    if name == SuiteName::Associator {
        cases = cases.into_iter().map(ConformanceCase::informational).collect();
    }
    Ok(Report {
        suite: name,
        required: name.required(),
        engine_version: ENGINE_VERSION.to_string(),
        seed: config.seed,
        config: config.clone(),
        summary: Summary::of(&cases),
        cases,
    })
}

/// Process exit status for a set of reports: 0 iff no required suite failed.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(Report::blocks) {
        1
    } else {
        0
    }
}
