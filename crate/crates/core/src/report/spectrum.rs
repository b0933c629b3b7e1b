//! Spectrum tables: engine eigenvalue, printed energy and their residual
//! for each level of one side.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::TwistedElement;
use crate::error::StateError;
use crate::star::HamiltonianMethod;
use crate::states::{ladder, spectrum_entry, StateSide, DEFAULT_MAX_LEVEL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaMode {
    /// first order in ω
    Symbolic,
    /// every column reduced to ω = 0
    Zero,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub level: u32,
    pub engine: TwistedElement,
    pub paper: TwistedElement,
    pub residual: TwistedElement,
    pub limit: TwistedElement,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumTable {
    pub side: StateSide,
    pub omega_mode: OmegaMode,
    pub method: HamiltonianMethod,
    pub rows: Vec<SpectrumRow>,
}

pub fn spectrum_table(
    side: StateSide,
    max_level: u32,
    omega_mode: OmegaMode,
    method: HamiltonianMethod,
) -> Result<SpectrumTable, StateError> {
    if max_level > DEFAULT_MAX_LEVEL {
        return Err(StateError::LevelTooLarge { level: max_level, max: DEFAULT_MAX_LEVEL });
    }
    let reduce = |x: TwistedElement| match omega_mode {
        OmegaMode::Symbolic => x,
        OmegaMode::Zero => x.limit_omega_zero(),
    };
    let rows = (0..=max_level)
        .map(|level| {
            let e = spectrum_entry(&ladder(side, level)?, method)?;
            Ok(SpectrumRow {
                level,
                engine: reduce(e.engine),
                paper: reduce(e.paper),
                residual: reduce(e.residual),
                limit: e.limit,
            })
        })
        .collect::<Result<Vec<_>, StateError>>()?;
    Ok(SpectrumTable { side, omega_mode, method, rows })
}

impl SpectrumTable {
    /// The mirror-image table, for comparing right and left spectra.
    pub fn mirrored(&self) -> SpectrumTable {
        let side = match self.side {
            StateSide::Right => StateSide::Left,
            StateSide::Left => StateSide::Right,
        };
        let rows = self
            .rows
            .iter()
            .map(|r| SpectrumRow {
                level: r.level,
                engine: r.engine.mirrored(),
                paper: r.paper.mirrored(),
                residual: r.residual.mirrored(),
                limit: r.limit.mirrored(),
            })
            .collect();
        SpectrumTable { side, omega_mode: self.omega_mode, method: self.method, rows }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mode = match self.omega_mode {
            OmegaMode::Symbolic => "first order in ω",
            OmegaMode::Zero => "ω = 0",
        };
        let _ = writeln!(out, "{} states, {} Hamiltonian, {mode}", self.side.as_str(), self.method.as_str());
        for r in &self.rows {
            let _ = writeln!(out, "level {}", r.level);
            let _ = writeln!(out, "  engine   {}", r.engine);
            let _ = writeln!(out, "  printed  {}", r.paper);
            let _ = writeln!(out, "  residual {}", r.residual);
            let _ = writeln!(out, "  ω → 0    {}", r.limit);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;
    use crate::scalar::Scalar;

    #[test]
    fn zero_mode_levels() {
        let t = spectrum_table(StateSide::Right, 3, OmegaMode::Zero, HamiltonianMethod::Series).unwrap();
        for (m, row) in t.rows.iter().enumerate() {
            let expected = TwistedElement::term(Scalar::ratio(2 * m as i64 + 1, 2), 1, Monomial::ONE);
            assert_eq!(row.engine, expected);
            assert!(row.residual.is_zero());
        }
    }

    #[test]
    fn bracket_ground_level_matches() {
        let t = spectrum_table(StateSide::Right, 0, OmegaMode::Symbolic, HamiltonianMethod::Bracket).unwrap();
        assert!(t.rows[0].residual.is_zero());
        assert_eq!(t.rows[0].engine, "1/2 θ^1 - 1 θ^1 abar^1 wbar^1".parse().unwrap());
    }

    #[test]
    fn left_is_mirror_of_right() {
        for method in HamiltonianMethod::ALL {
            if method == HamiltonianMethod::MuOperator {
                continue;
            }
            let r = spectrum_table(StateSide::Right, 4, OmegaMode::Symbolic, method).unwrap();
            let l = spectrum_table(StateSide::Left, 4, OmegaMode::Symbolic, method).unwrap();
            assert_eq!(r.mirrored(), l);
        }
    }

    #[test]
    fn level_limit() {
        let e = spectrum_table(StateSide::Left, 13, OmegaMode::Zero, HamiltonianMethod::Series);
        assert_eq!(e, Err(StateError::LevelTooLarge { level: 13, max: 12 }));
    }
}
