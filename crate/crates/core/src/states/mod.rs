//! Oscillator states built by generator star-actions, their pointwise
//! eigenvalues, and the printed closed forms they are audited against.
//!
//! Every state is stored unnormalized: `f̃ᴿ_m = ā⋆(ā⋆(…⋆f₀₀ᴿ))` with the
//! factor `(m!θ^m)^{-1/2}` kept in a [`NormTag`].

mod appendix;
mod energy;
mod matrix_basis;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, NormTag, NormalizedState, TwistedElement};
use crate::error::StateError;
use crate::scalar::Scalar;
use crate::star::{hamiltonian, lower_left, lower_right, raise_left, raise_right, ActionSide, HamiltonianMethod};

pub use appendix::{
    appendix_a_expression, appendix_a_line, appendix_b_case, power_family_case, AppendixALine, AppendixBFamily,
};
pub use energy::{lambda_sum, paper_energy, EnergyKind};
pub use matrix_basis::{matrix_basis_action, MatrixBasisElement, MatrixBasisOp};

pub const DEFAULT_MAX_LEVEL: u32 = 12;

/// Right states diagonalize `H⋆(·)`, left states `(·)⋆H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateSide {
    Right,
    Left,
}

impl StateSide {
    pub const BOTH: [StateSide; 2] = [StateSide::Right, StateSide::Left];

    /// Side from which the Hamiltonian and the ladder functions act.
    pub fn action_side(self) -> ActionSide {
        match self {
            StateSide::Right => ActionSide::Left,
            StateSide::Left => ActionSide::Right,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StateSide::Right => "right",
            StateSide::Left => "left",
        }
    }

    /// Maps a right-side formula to this side.
    pub(crate) fn orient(self, right: TwistedElement) -> TwistedElement {
        match self {
            StateSide::Right => right,
            StateSide::Left => right.mirrored(),
        }
    }
}

impl std::str::FromStr for StateSide {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "right" | "R" => Ok(StateSide::Right),
            "left" | "L" => Ok(StateSide::Left),
            other => Err(format!("unknown side `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderState {
    pub body: TwistedElement,
    pub side: StateSide,
    pub level: u32,
    pub norm_tag: NormTag,
}

impl LadderState {
    fn new(body: TwistedElement, side: StateSide, level: u32) -> Self {
        let norm_tag = match side {
            StateSide::Right => NormTag { m: level, n: 0 },
            StateSide::Left => NormTag { m: 0, n: level },
        };
        Self { body, side, level, norm_tag }
    }

    pub fn normalized(&self) -> NormalizedState {
        NormalizedState::new(self.body.clone(), self.norm_tag)
    }

    /// One more creation step: `ā⋆f` for right states, `f⋆a` for left ones.
    pub fn raised(&self) -> LadderState {
        let body = match self.side {
            StateSide::Right => raise_left(&self.body),
            StateSide::Left => raise_right(&self.body),
        };
        LadderState::new(body, self.side, self.level + 1)
    }
}

/// `f₀₀ᴿ = 2G(1 - (2a²ā/θ)ω - (aā²/θ)ω̄)` and its mirror `f₀₀ᴸ`.
pub fn fundamental(side: StateSide) -> LadderState {
    let g = Monomial::ONE.with_gaussian(1);
    let right = TwistedElement::term(Scalar::int(2), 0, g)
        + TwistedElement::term(Scalar::int(-4), -1, Monomial::new(2, 1).with_omega(1, 0).with_gaussian(1))
        + TwistedElement::term(Scalar::int(-2), -1, Monomial::new(1, 2).with_omega(0, 1).with_gaussian(1));
    LadderState::new(side.orient(right), side, 0)
}

pub fn ladder(side: StateSide, level: u32) -> Result<LadderState, StateError> {
    ladder_with_limit(side, level, DEFAULT_MAX_LEVEL)
}

pub fn ladder_with_limit(side: StateSide, level: u32, max: u32) -> Result<LadderState, StateError> {
    if level > max {
        return Err(StateError::LevelTooLarge { level, max });
    }
    Ok((0..level).fold(fundamental(side), |s, _| s.raised()))
}

/// Levels `0..=max_level`, built incrementally.
pub fn ladder_family(side: StateSide, max_level: u32) -> Result<Vec<LadderState>, StateError> {
    if max_level > DEFAULT_MAX_LEVEL {
        return Err(StateError::LevelTooLarge { level: max_level, max: DEFAULT_MAX_LEVEL });
    }
    let mut out = vec![fundamental(side)];
    for _ in 0..max_level {
        let next = out.last().expect("nonempty").raised();
        out.push(next);
    }
    Ok(out)
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// `U_m = (m-1)2^{m-2} + Σ_{k=0}^{m-3}(k+1)2^{k+1}` for `m ≥ 3`, with
/// `U₀ = U₁ = 0`, `U₂ = 1`.
pub fn u_sequence(m: u32) -> BigRational {
    let value = match m {
        0 | 1 => BigInt::from(0),
        2 => BigInt::from(1),
        _ => {
            let head = BigInt::from(m - 1) << (m - 2);
            let tail: BigInt = (0..=m - 3).map(|k| BigInt::from(k + 1) << (k + 1)).sum();
            head + tail
        }
    };
    BigRational::from_integer(value)
}

/// `-[θ ω ā^{m-1} G]` coefficient of `f̃ᴿ_m`: the value the closed form
/// attributes to `U_m` (mirror monomial for left states).
pub fn engine_u(state: &LadderState) -> Scalar {
    if state.level == 0 {
        return Scalar::zero();
    }
    let mono = Monomial::new(0, state.level as i32 - 1).with_omega(1, 0).with_gaussian(1);
    let mono = match state.side {
        StateSide::Right => mono,
        StateSide::Left => mono.mirrored(),
    };
    -state.body.coefficient(mono, 1)
}

/// Unnormalized printed state: `[2^m ā^m(1 + maω/2 - māω̄/4) - U_m θ ω ā^{m-1}/2]·f₀₀ᴿ`
/// (mirror for left states).
pub fn closed_form(side: StateSide, level: u32) -> TwistedElement {
    let m = level as i64;
    let abar_m = |c: Scalar, theta: i32, extra_p: i32, extra_q: i32, r: u8, s: u8| {
        TwistedElement::term(c, theta, Monomial::new(extra_p, level as i32 + extra_q).with_omega(r, s))
    };
    let two_m = Scalar::from_rational(BigRational::from_integer(BigInt::from(1) << level));
    let mut bracket = abar_m(two_m.clone(), 0, 0, 0, 0, 0)
        + abar_m(&two_m * &Scalar::ratio(m, 2), 0, 1, 0, 1, 0)
        + abar_m(&two_m * &Scalar::ratio(-m, 4), 0, 0, 1, 0, 1);
    if level >= 1 {
        let u = Scalar::from_rational(u_sequence(level)) * Scalar::ratio(-1, 2);
        bracket = bracket + abar_m(u, 1, 0, -1, 1, 0);
    }
    side.orient(bracket) * fundamental(side).body
}

/// `E` with `E·f = Hf` to first order, Laurent in `a, ā` if needed.
pub fn extract_eigenvalue(hf: &TwistedElement, f: &TwistedElement) -> Result<TwistedElement, StateError> {
    if hf.is_zero() {
        return Ok(TwistedElement::zero());
    }
    let weights = f.gaussian_weights();
    let not_proportional = |r: TwistedElement| StateError::NotProportional { residual: Box::new(r) };
    let g = match weights.as_slice() {
        [g] => *g,
        _ => return Err(not_proportional(hf.clone())),
    };
    let hs = hf.strip_gaussian(g).map_err(|_| not_proportional(hf.clone()))?;
    let inverse = f.strip_gaussian(g)?.invert_unit()?;
    let e = hs * inverse;
    let residual = &e * f - hf;
    if residual.is_zero() {
        Ok(e)
    } else {
        Err(not_proportional(residual))
    }
}

/// `a^{⋆power}⋆f` for right states, `f⋆ā^{⋆power}` for left ones.
pub fn apply_ladder_lowering(state: &LadderState, power: u32) -> TwistedElement {
    lower_n(state.side, &state.body, power)
}

pub(crate) fn lower_n(side: StateSide, body: &TwistedElement, power: u32) -> TwistedElement {
    let step = match side {
        StateSide::Right => lower_left,
        StateSide::Left => lower_right,
    };
    (0..power).fold(body.clone(), |acc, _| if acc.is_zero() { acc } else { step(&acc) })
}

/// Pointwise eigenvalue of the Hamiltonian acting from the state's side.
pub fn engine_energy(
    side: StateSide,
    body: &TwistedElement,
    method: HamiltonianMethod,
) -> Result<TwistedElement, StateError> {
    extract_eigenvalue(&hamiltonian(body, side.action_side(), method), body)
}

/// One row of a spectrum table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub side: StateSide,
    pub level: u32,
    pub method: HamiltonianMethod,
    pub engine: TwistedElement,
    pub paper: TwistedElement,
    pub residual: TwistedElement,
    pub limit: TwistedElement,
}

/// Engine vs printed energy for `f̃ᴿ_m` (or `f̃ᴸ_n`).
pub fn spectrum_entry(state: &LadderState, method: HamiltonianMethod) -> Result<SpectrumEntry, StateError> {
    let engine = engine_energy(state.side, &state.body, method)?;
    let kind = match state.side {
        StateSide::Right => EnergyKind::RightM { m: state.level },
        StateSide::Left => EnergyKind::LeftN { n: state.level },
    };
    let paper = paper_energy(kind)?;
    Ok(SpectrumEntry {
        side: state.side,
        level: state.level,
        method,
        residual: &engine - &paper,
        limit: engine.limit_omega_zero(),
        engine,
        paper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{star_gen_left, Generator};

    fn el(s: &str) -> TwistedElement {
        s.parse().unwrap()
    }

    #[test]
    fn fundamental_states() {
        let r = fundamental(StateSide::Right);
        assert!(star_gen_left(Generator::A, &r.body).is_zero());
        assert_eq!(r.body.limit_omega_zero(), el("2 G^1"));
        let l = fundamental(StateSide::Left);
        assert_eq!(l.body, r.body.mirrored());
        assert!(lower_right(&l.body).is_zero());
    }

    #[test]
    fn first_excited_states() {
        let r = ladder(StateSide::Right, 1).unwrap();
        let f00 = fundamental(StateSide::Right).body;
        assert_eq!(r.body, el("2 abar^1 + a^1 abar^1 w^1 - 1/2 abar^2 wbar^1") * &f00);
        assert_eq!(r.body, closed_form(StateSide::Right, 1));
        let l = ladder(StateSide::Left, 1).unwrap();
        let f00l = fundamental(StateSide::Left).body;
        assert_eq!(l.body, el("2 a^1 + a^1 abar^1 wbar^1 - 1/2 a^2 w^1") * &f00l);
        assert_eq!(l.norm_tag, NormTag { m: 0, n: 1 });
    }

    #[test]
    fn ladder_limits() {
        assert_eq!(ladder(StateSide::Right, 0).unwrap(), fundamental(StateSide::Right));
        assert_eq!(ladder(StateSide::Right, 13), Err(StateError::LevelTooLarge { level: 13, max: 12 }));
        let fam = ladder_family(StateSide::Right, 5).unwrap();
        for (m, s) in fam.iter().enumerate() {
            let lead = TwistedElement::term(Scalar::int(1 << (m + 1)), 0, Monomial::new(0, m as i32).with_gaussian(1));
            assert_eq!(s.body.limit_omega_zero(), lead);
        }
    }

    #[test]
    fn u_values() {
        let u: Vec<BigRational> = (0..5).map(u_sequence).collect();
        let expect: Vec<BigRational> =
            [0, 0, 1, 6, 22].iter().map(|&n| BigRational::from_integer(BigInt::from(n))).collect();
        assert_eq!(u, expect);
        let s3 = ladder(StateSide::Right, 3).unwrap();
        assert_eq!(engine_u(&s3), Scalar::from_rational(u_sequence(3)));
    }

    #[test]
    fn closed_form_base_cases() {
        assert_eq!(closed_form(StateSide::Right, 0), fundamental(StateSide::Right).body);
        let two = closed_form(StateSide::Right, 2);
        let f00 = fundamental(StateSide::Right).body;
        let u_term = el("-1/2 θ^1 abar^1 w^1") * &f00;
        let rest = el("4 abar^2 + 4 a^1 abar^2 w^1 - 2 abar^3 wbar^1") * &f00;
        assert_eq!(two, rest + u_term);
    }

    #[test]
    fn eigenvalue_extraction() {
        let f = fundamental(StateSide::Right).body;
        assert_eq!(extract_eigenvalue(&f, &f).unwrap(), TwistedElement::one());
        for m in 0..4 {
            let s = ladder(StateSide::Right, m).unwrap();
            let e = engine_energy(StateSide::Right, &s.body, HamiltonianMethod::Series).unwrap();
            let expected = TwistedElement::theta().scale(&Scalar::ratio(2 * m as i64 + 1, 2));
            assert_eq!(e.limit_omega_zero(), expected);
        }
        let mismatch = extract_eigenvalue(&el("1 G^2"), &f);
        assert!(matches!(mismatch, Err(StateError::NotProportional { .. })));
    }

    #[test]
    fn degeneracy() {
        for m in 0..4 {
            let s = ladder(StateSide::Right, m).unwrap();
            assert!(apply_ladder_lowering(&s, m + 2).is_zero());
            let top = apply_ladder_lowering(&s, m + 1);
            let ratio = extract_eigenvalue(&top, &fundamental(StateSide::Right).body).unwrap();
            assert!(ratio.is_coordinate_free(), "{ratio}");
        }
        let s = ladder(StateSide::Right, 2).unwrap();
        assert_eq!(apply_ladder_lowering(&s, 0), s.body);
    }
}
