//! Printed ladder actions on the states and the derivative identities of
//! the fundamental states, as elements for comparison with the engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{closed_form, factorial, fundamental, lambda_sum, u_sequence, StateSide};
use crate::algebra::{Monomial, TwistedElement, Var};
use crate::error::StateError;
use crate::scalar::Scalar;

/// The individually printed lines for `a^k⋆fᴿ_{m0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "line", content = "k", rename_all = "snake_case")]
pub enum AppendixALine {
    /// `k = 1`
    First,
    /// `k = 2`
    Second,
    /// the general `k ≤ m` line
    General(u32),
    /// `k = m`
    Top,
    /// `k = m + 1`
    Proportional,
    /// `k = m + 2`
    Vanishing,
}

impl AppendixALine {
    pub fn power(self, m: u32) -> u32 {
        match self {
            AppendixALine::First => 1,
            AppendixALine::Second => 2,
            AppendixALine::General(k) => k,
            AppendixALine::Top => m,
            AppendixALine::Proportional => m + 1,
            AppendixALine::Vanishing => m + 2,
        }
    }

    pub fn label(self) -> String {
        match self {
            AppendixALine::First => "k=1".into(),
            AppendixALine::Second => "k=2".into(),
            AppendixALine::General(k) => format!("general(k={k})"),
            AppendixALine::Top => "k=m".into(),
            AppendixALine::Proportional => "k=m+1".into(),
            AppendixALine::Vanishing => "k=m+2".into(),
        }
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn term(c: BigRational, theta: i32, p: i32, q: i32, r: u8, s: u8) -> TwistedElement {
    TwistedElement::term(Scalar::from_rational(c), theta, Monomial::new(p, q).with_omega(r, s))
}

/// `θ^k · lead · ā^{m-k}[1 + α aω + β āω̄] - ucoef · θ^{k+1} ω ā^{m-k-1}`
fn bracket_form(
    m: u32,
    k: u32,
    lead: BigRational,
    alpha: BigRational,
    beta: BigRational,
    ucoef: BigRational,
) -> TwistedElement {
    let d = m as i32 - k as i32;
    let kt = k as i32;
    term(lead.clone(), kt, 0, d, 0, 0) + term(&lead * &alpha, kt, 1, d, 1, 0) + term(&lead * &beta, kt, 0, d + 1, 0, 1)
        - term(ucoef, kt + 1, 0, d - 1, 1, 0)
}

fn pow2(e: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(1) << e)
}

/// Right-side line as printed, times `√(m!θ^m)`, without the `f₀₀ᴿ` factor.
fn right_line(m: u32, line: AppendixALine) -> Result<TwistedElement, StateError> {
    let mi = m as i64;
    let u = u_sequence(m);
    let out_of_range = || StateError::IndexOutOfRange(format!("{} with m={m}", line.label()));
    Ok(match line {
        AppendixALine::First => {
            if m < 1 {
                return Err(out_of_range());
            }
            let lead = q(mi, 1) * pow2(m - 1);
            let ucoef = q(mi - 1, 4) * &u;
            bracket_form(m, 1, lead, q(mi - 2, 2), q(-(mi + 5), 4), ucoef)
        }
        AppendixALine::Second => {
            if m < 2 {
                return Err(out_of_range());
            }
            let lead = q(mi * (mi - 1), 1) * pow2(m - 2);
            let beta = -q((mi + 9) * (mi - 1) + mi + 5, 4 * (mi - 1));
            let ucoef = q((mi - 1) * (mi - 2), 8) * &u;
            bracket_form(m, 2, lead, q(mi - 4, 2), beta, ucoef)
        }
        AppendixALine::General(k) => {
            if k < 1 || k > m {
                return Err(out_of_range());
            }
            let ki = k as i64;
            let falling = BigRational::from_integer(factorial(m) / factorial(m - k));
            let lead = falling * pow2(m - k);
            let beta = -BigRational::from_integer(factorial(m - k)) * lambda_sum(m, k) / q(4, 1);
            let prod: i64 = (1..=ki).map(|i| mi - i).product();
            let ucoef = q(prod, 1) * &u / pow2(k + 1);
            bracket_form(m, k, lead, q(mi - 2 * ki, 2), beta, ucoef)
        }
        AppendixALine::Top => {
            if m < 1 {
                return Err(out_of_range());
            }
            let lead = BigRational::from_integer(factorial(m));
            let beta = -lambda_sum(m, m) / q(4, 1);
            bracket_form(m, m, lead, q(-mi, 2), beta, q(0, 1))
        }
        AppendixALine::Proportional => {
            let c = -BigRational::from_integer(factorial(m)) * lambda_sum(m, m) / q(8, 1);
            term(c, m as i32 + 1, 0, 0, 0, 1)
        }
        AppendixALine::Vanishing => TwistedElement::zero(),
    })
}

/// A specific printed line, unnormalized (multiplied by `√(m!θ^m)`),
/// including the fundamental-state factor.
pub fn appendix_a_line(side: StateSide, m: u32, line: AppendixALine) -> Result<TwistedElement, StateError> {
    let bracket = right_line(m, line)?;
    Ok(side.orient(bracket) * fundamental(side).body)
}

/// `a^k⋆f̃ᴿ_m` as printed, for `k ≤ m + 2`; `k = 0` is the state itself.
pub fn appendix_a_expression(side: StateSide, m: u32, k: u32) -> Result<TwistedElement, StateError> {
    match k {
        0 => Ok(closed_form(side, m)),
        k if k <= m => appendix_a_line(side, m, AppendixALine::General(k)),
        k if k == m + 1 => appendix_a_line(side, m, AppendixALine::Proportional),
        k if k == m + 2 => appendix_a_line(side, m, AppendixALine::Vanishing),
        _ => Err(StateError::IndexOutOfRange(format!("k={k} > m+2 with m={m}"))),
    }
}

/// The four derivative identities for the fundamental states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AppendixBFamily {
    /// `∂_a^k f₀₀ᴿ`
    RightDa,
    /// `∂_ā^k f₀₀ᴿ`
    RightDabar,
    /// `∂_ā^k f₀₀ᴸ`
    LeftDabar,
    /// `∂_a^k f₀₀ᴸ`
    LeftDa,
}

impl AppendixBFamily {
    pub const ALL: [AppendixBFamily; 4] =
        [AppendixBFamily::RightDa, AppendixBFamily::RightDabar, AppendixBFamily::LeftDabar, AppendixBFamily::LeftDa];

    pub fn as_str(self) -> &'static str {
        match self {
            AppendixBFamily::RightDa => "d_a^k f00R",
            AppendixBFamily::RightDabar => "d_abar^k f00R",
            AppendixBFamily::LeftDabar => "d_abar^k f00L",
            AppendixBFamily::LeftDa => "d_a^k f00L",
        }
    }

    fn side(self) -> StateSide {
        match self {
            AppendixBFamily::RightDa | AppendixBFamily::RightDabar => StateSide::Right,
            _ => StateSide::Left,
        }
    }

    fn var(self) -> Var {
        match self {
            AppendixBFamily::RightDa | AppendixBFamily::LeftDa => Var::A,
            _ => Var::Abar,
        }
    }
}

/// `(-2x/θ)^j` for `x = ā` (`conj = true`) or `x = a`.
fn power_of(var_is_abar: bool, j: i32) -> TwistedElement {
    let c = Scalar::from_rational(BigRational::from_integer(BigInt::from(-2).pow(j.unsigned_abs())));
    let (p, qq) = if var_is_abar { (0, j) } else { (j, 0) };
    TwistedElement::term(c, -j, Monomial::new(p, qq))
}

/// `(engine, printed)` for one family at order `k ≥ 1`.
pub fn appendix_b_case(family: AppendixBFamily, k: u32) -> (TwistedElement, TwistedElement) {
    let f00 = fundamental(family.side()).body;
    let engine = f00.derive_n(family.var(), k);
    let ki = k as i64;
    let kj = k as i32;
    // right-side printed bracket, mirrored for the left families
    let bracket = match family {
        AppendixBFamily::RightDa | AppendixBFamily::LeftDabar => {
            // k(k-1)ω(-2ā/θ)^{k-1} + (-2ā/θ)^k e^k (1 + k aω - k āω̄/2)
            let omega_part = (TwistedElement::omega() * power_of(true, kj - 1)).scale(&Scalar::int(ki * (ki - 1)));
            let correction = TwistedElement::one()
                + TwistedElement::term(Scalar::int(ki), 0, Monomial::new(1, 0).with_omega(1, 0))
                + TwistedElement::term(Scalar::ratio(-ki, 2), 0, Monomial::new(0, 1).with_omega(0, 1));
            omega_part + power_of(true, kj) * TwistedElement::e_pow(kj) * correction
        }
        AppendixBFamily::RightDabar | AppendixBFamily::LeftDa => {
            // k(k-1)/2 ω̄(-2a/θ)^{k-1} + (-2a/θ)^k e^k
            let omega_part =
                (TwistedElement::omegabar() * power_of(false, kj - 1)).scale(&Scalar::ratio(ki * (ki - 1), 2));
            omega_part + power_of(false, kj) * TwistedElement::e_pow(kj)
        }
    };
    let bracket = match family.side() {
        StateSide::Right => bracket,
        StateSide::Left => bracket.mirrored(),
    };
    (engine, bracket * f00)
}

/// `(engine, printed)` for `∂_x^k (-2x/(θe^{-1}))^l`, `x = a` or `ā`.
pub fn power_family_case(var: Var, k: u32, l: u32) -> (TwistedElement, TwistedElement) {
    let is_abar = var == Var::Abar;
    let base = power_of(is_abar, l as i32) * TwistedElement::e_pow(l as i32);
    let engine = base.derive_n(var, k);
    let falling = |top: u32, bottom: i64| -> BigRational {
        // l!/(bottom)!, zero when bottom < 0
        if bottom < 0 {
            BigRational::from_integer(BigInt::from(0))
        } else {
            BigRational::new(factorial(top), factorial(bottom as u32))
        }
    };
    let (ki, li) = (k as i64, l as i64);
    let twist = if is_abar { TwistedElement::omegabar() } else { TwistedElement::omega() };
    let minus_two_over_theta = |j: i32| {
        let c = Scalar::from_rational(BigRational::from_integer(BigInt::from(-2).pow(j.unsigned_abs())));
        TwistedElement::term(c, -j, Monomial::ONE)
    };
    let first_coeff = falling(l, li - ki + 1) * BigRational::from_integer(BigInt::from(ki * li));
    let first = if first_coeff == BigRational::from_integer(BigInt::from(0)) {
        TwistedElement::zero()
    } else {
        (twist * minus_two_over_theta(k as i32 - 1) * power_of(is_abar, (li - ki + 1) as i32))
            .scale(&Scalar::from_rational(first_coeff))
    };
    let second_coeff = falling(l, li - ki);
    let second = if second_coeff == BigRational::from_integer(BigInt::from(0)) {
        TwistedElement::zero()
    } else {
        (minus_two_over_theta(k as i32) * power_of(is_abar, (li - ki) as i32) * TwistedElement::e_pow(l as i32))
            .scale(&Scalar::from_rational(second_coeff))
    };
    (engine, first + second)
}
