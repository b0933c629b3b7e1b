//! Floating-point evaluation of elements and independent numeric star
//! products used to cross-check the exact engine.

mod plane_wave;
mod quadrature;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{NormalizedState, TwistedElement};
use crate::error::NumericError;
use crate::scalar::rational_to_f64;

pub use plane_wave::{plane_wave_check, plane_wave_scaling};
pub use quadrature::{gauss_hermite, star_quadrature};

/// Values substituted for `a, ā, θ, ω, ω̄`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericPoint {
    pub a: Complex64,
    pub abar: Complex64,
    pub theta: f64,
    pub omega: Complex64,
    pub omegabar: Complex64,
    /// `true` when `a, ā` are not a conjugate pair (pure algebra checks only).
    pub independent: bool,
}

impl NumericPoint {
    /// Real point `x = (x¹, x²)`, `a = (x¹ + ix²)/√2`.
    pub fn real(x1: f64, x2: f64, theta: f64, omega: Complex64) -> Self {
        let a = Complex64::new(x1, x2) / std::f64::consts::SQRT_2;
        Self { a, abar: a.conj(), theta, omega, omegabar: omega.conj(), independent: false }
    }

    pub fn complex(a: Complex64, abar: Complex64, theta: f64, omega: Complex64, omegabar: Complex64) -> Self {
        Self { a, abar, theta, omega, omegabar, independent: true }
    }

    /// `(x¹, x²)` of a real point.
    pub fn coordinates(&self) -> (f64, f64) {
        let s = std::f64::consts::SQRT_2;
        (s * self.a.re, s * self.a.im)
    }

    /// `e^{-1} = 1 - aω - āω̄` at this point.
    pub fn e_inv(&self) -> Complex64 {
        Complex64::new(1.0, 0.0) - self.a * self.omega - self.abar * self.omegabar
    }

    pub fn with_omega(&self, omega: Complex64) -> Self {
        Self { omega, omegabar: omega.conj(), ..*self }
    }

    /// Same point at `a, ā` given by real coordinates, keeping θ and ω.
    pub(crate) fn moved_to(&self, x1: f64, x2: f64) -> Self {
        Self { omega: self.omega, omegabar: self.omegabar, ..Self::real(x1, x2, self.theta, self.omega) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericConfig {
    pub theta_val: f64,
    pub omega_val: Complex64,
    pub omegabar_val: Complex64,
    pub quadrature_nodes: usize,
    pub series_terms: usize,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self::new(1.0, Complex64::new(0.0, 0.0))
    }
}

impl NumericConfig {
    pub const DEFAULT_NODES: usize = 48;
    pub const DEFAULT_SERIES_TERMS: usize = 30;

    pub fn new(theta: f64, omega: Complex64) -> Self {
        Self {
            theta_val: theta,
            omega_val: omega,
            omegabar_val: omega.conj(),
            quadrature_nodes: Self::DEFAULT_NODES,
            series_terms: Self::DEFAULT_SERIES_TERMS,
        }
    }

    pub fn with_nodes(self, nodes: usize) -> Self {
        Self { quadrature_nodes: nodes, ..self }
    }

    pub fn validate(&self) -> Result<(), NumericError> {
        let bad = |m: &str| Err(NumericError::BadConfig(m.to_string()));
        if !(self.theta_val.is_finite() && self.theta_val > 0.0) {
            return bad("theta must be positive and finite");
        }
        if (self.omegabar_val - self.omega_val.conj()).norm() > 1e-15 {
            return bad("omegabar must be the complex conjugate of omega");
        }
        if !self.omega_val.norm().is_finite() || self.omega_val.norm() >= 1.0 {
            return bad("|omega| must be small (< 1)");
        }
        if self.quadrature_nodes < 8 {
            return bad("at least 8 quadrature nodes per axis are required");
        }
        if self.series_terms < 1 {
            return bad("series_terms must be at least 1");
        }
        Ok(())
    }

    /// Real point `(x¹, x²)` with this configuration's θ and ω.
    pub fn point(&self, x1: f64, x2: f64) -> NumericPoint {
        NumericPoint::real(x1, x2, self.theta_val, self.omega_val)
    }
}

fn ipow(z: Complex64, e: i32) -> Result<Complex64, NumericError> {
    if e < 0 && z.norm() == 0.0 {
        return Err(NumericError::DivisionAtPole);
    }
    Ok(z.powi(e))
}

/// Evaluates `f` with every Gaussian weight lowered by `shift`.
pub(crate) fn eval_shifted(f: &TwistedElement, at: &NumericPoint, shift: u32) -> Result<Complex64, NumericError> {
    let aa = at.a * at.abar;
    let mut sum = Complex64::new(0.0, 0.0);
    for (mono, coef) in f.terms() {
        let c = Complex64::new(rational_to_f64(&coef.value.re), rational_to_f64(&coef.value.im));
        let mut v = c * at.theta.powi(coef.theta_power);
        v *= ipow(at.a, mono.p)? * ipow(at.abar, mono.q)?;
        if mono.r == 1 {
            v *= at.omega;
        }
        if mono.s == 1 {
            v *= at.omegabar;
        }
        let g = mono.g as f64 - shift as f64;
        if g != 0.0 {
            v *= (-2.0 * g * aa / at.theta).exp();
        }
        sum += v;
    }
    Ok(sum)
}

pub fn eval(f: &TwistedElement, at: &NumericPoint) -> Result<Complex64, NumericError> {
    eval_shifted(f, at, 0)
}

/// Value of a normalized state, including its `(m!n!θ^{m+n})^{-1/2}` factor.
pub fn eval_state(state: &NormalizedState, at: &NumericPoint) -> Result<Complex64, NumericError> {
    Ok(eval(&state.body, at)? * state.norm_factor(at.theta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn origin_free() -> NumericPoint {
        NumericPoint::real(0.3, -0.2, 1.0, Complex64::new(0.0, 0.0))
    }

    #[test]
    fn ground_state_value() {
        let f00: TwistedElement = "2 G^1 - 2 θ^-1 a^1 abar^2 wbar^1 G^1 - 4 θ^-1 a^2 abar^1 w^1 G^1".parse().unwrap();
        let v = eval(&f00, &origin_free()).unwrap();
        assert!((v.re - 2.0 * (-0.13f64).exp()).abs() < 1e-12 && v.im.abs() < 1e-14);
        assert!((v.re - 1.756190).abs() < 1e-6);
    }

    #[test]
    fn trivial_values() {
        let p = NumericPoint::real(0.7, 0.1, 0.25, Complex64::new(0.0, 0.0));
        assert_eq!(eval(&TwistedElement::one(), &p).unwrap(), Complex64::new(1.0, 0.0));
        let v = eval(&TwistedElement::e_inv().scale_theta(1), &p).unwrap();
        assert!((v - Complex64::new(0.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn poles() {
        let inv: TwistedElement = "1 a^-1".parse().unwrap();
        let p = NumericPoint::real(0.0, 0.0, 1.0, Complex64::new(0.0, 0.0));
        assert_eq!(eval(&inv, &p), Err(NumericError::DivisionAtPole));
    }

    #[test]
    fn config_validation() {
        assert!(NumericConfig::default().validate().is_ok());
        assert!(NumericConfig::default().with_nodes(4).validate().is_err());
        let mut c = NumericConfig::new(1.0, Complex64::new(0.01, 0.02));
        assert!(c.validate().is_ok());
        c.omegabar_val = c.omega_val;
        assert!(c.validate().is_err());
        assert!(NumericConfig::new(-1.0, Complex64::new(0.0, 0.0)).validate().is_err());
    }

    #[test]
    fn normalization_factor_applied() {
        let s = NormalizedState::new(TwistedElement::one(), crate::algebra::NormTag { m: 2, n: 1 });
        let v = eval_state(&s, &NumericPoint::real(0.1, 0.1, 2.0, Complex64::new(0.0, 0.0))).unwrap();
        assert!((v.re - (2.0f64 * 8.0).sqrt().recip()).abs() < 1e-15);
    }
}
