//! One checked identity with its verdict and, when it does not vanish,
//! the exact residual.

use serde::{Deserialize, Serialize};

use crate::algebra::{RootTwoScaled, TwistedElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "INFO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericRecord {
    /// `[re, im]`
    pub expected: [f64; 2],
    pub actual: [f64; 2],
    pub abs_error: f64,
    pub rel_error: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nodes: Option<usize>,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConformanceCase {
    pub id: String,
    pub paper_anchor: String,
    pub status: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<TwistedElement>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub numeric: Option<NumericRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl ConformanceCase {
    fn bare(id: impl Into<String>, anchor: impl Into<String>, status: Verdict) -> Self {
        Self {
            id: id.into(),
            paper_anchor: anchor.into(),
            status,
            residual: None,
            residual_text: None,
            numeric: None,
            note: None,
        }
    }

    /// PASS iff `residual` is exactly zero; otherwise FAIL carrying it.
    pub fn exact(id: impl Into<String>, anchor: impl Into<String>, residual: TwistedElement) -> Self {
        if residual.is_zero() {
            Self::bare(id, anchor, Verdict::Pass)
        } else {
            Self::bare(id, anchor, Verdict::Fail).with_residual(residual)
        }
    }

    /// Same as [`exact`](Self::exact) for a √2-scaled residual; the power
    /// is recorded in the note.
    pub fn exact_scaled(id: impl Into<String>, anchor: impl Into<String>, residual: RootTwoScaled) -> Self {
        let power = residual.sqrt2_power;
        let case = Self::exact(id, anchor, residual.body);
        if power != 0 && case.status == Verdict::Fail {
            case.with_note(format!("residual carries a factor (√2)^{power}"))
        } else {
            case
        }
    }

    /// Informational value; never affects the exit status.
    pub fn info(id: impl Into<String>, anchor: impl Into<String>, value: TwistedElement) -> Self {
        Self::bare(id, anchor, Verdict::Info).with_residual(value)
    }

    pub fn check(id: impl Into<String>, anchor: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        let status = if ok { Verdict::Pass } else { Verdict::Fail };
        Self::bare(id, anchor, status).with_note(note)
    }

    pub fn numeric(
        id: impl Into<String>,
        anchor: impl Into<String>,
        expected: num_complex::Complex64,
        actual: num_complex::Complex64,
        tolerance: f64,
        nodes: Option<usize>,
    ) -> Self {
        let abs_error = (expected - actual).norm();
        let rel_error = if expected.norm() > 0.0 { abs_error / expected.norm() } else { abs_error };
        let ok = abs_error.is_finite() && abs_error < tolerance;
        let status = if ok { Verdict::Pass } else { Verdict::Fail };
        let mut case = Self::bare(id, anchor, status);
        case.numeric = Some(NumericRecord {
            expected: [expected.re, expected.im],
            actual: [actual.re, actual.im],
            abs_error,
            rel_error,
            nodes,
            tolerance,
        });
        case
    }

    /// A case that could not be evaluated at all.
    pub fn error(id: impl Into<String>, anchor: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self::bare(id, anchor, Verdict::Fail).with_note(format!("error: {err}"))
    }

    pub fn with_residual(mut self, residual: TwistedElement) -> Self {
        self.residual_text = Some(residual.to_string());
        self.residual = Some(residual);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
        self
    }

    /// Downgrades the verdict to INFO, keeping the residual.
    pub fn informational(mut self) -> Self {
        self.status = Verdict::Info;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Verdict::Pass
    }
}
