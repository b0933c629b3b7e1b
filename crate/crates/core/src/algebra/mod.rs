//! Laurent–Gaussian elements truncated at first order in the twist.
//!
//! An element is a finite sum of terms
//! `c · θ^t · a^p · ā^q · ω^r · ω̄^s · exp(-2g·aā/θ)` with `c` an exact
//! Gaussian rational, `p, q` any integers, `g ≥ 0` and `r + s ≤ 1`.
//! Products that would carry `r + s ≥ 2` are dropped.

mod scaled;
mod serial;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::scalar::Scalar;

pub use scaled::{coord_images, CoordImages, DerivativeImage, RootTwoScaled};
pub use serial::TermRecord;

/// Exponent tuple of one term. Ordering is `(g, r, s, p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub g: u32,
    pub r: u8,
    pub s: u8,
    pub p: i32,
    pub q: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { g: 0, r: 0, s: 0, p: 0, q: 0 };

    pub fn new(p: i32, q: i32) -> Self {
        Self { p, q, ..Self::ONE }
    }

    pub fn with_omega(mut self, r: u8, s: u8) -> Self {
        self.r = r;
        self.s = s;
        self
    }

    pub fn with_gaussian(mut self, g: u32) -> Self {
        self.g = g;
        self
    }

    pub fn omega_order(&self) -> u8 {
        self.r + self.s
    }

    /// Exponentwise product; `None` when the twist order exceeds one.
    pub fn times(&self, other: &Monomial) -> Option<Monomial> {
        let r = self.r + other.r;
        let s = self.s + other.s;
        if r + s > 1 {
            return None;
        }
        Some(Monomial { g: self.g + other.g, r, s, p: self.p + other.p, q: self.q + other.q })
    }

    /// a ↔ ā, ω ↔ ω̄.
    pub fn mirrored(&self) -> Monomial {
        Monomial { g: self.g, r: self.s, s: self.r, p: self.q, q: self.p }
    }
}

/// Rational (here Gaussian rational) value times an integer power of θ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficient {
    pub value: Scalar,
    pub theta_power: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct TermKey {
    pub mono: Monomial,
    pub theta: i32,
}

/// Differentiation variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    A,
    Abar,
}

impl Var {
    pub fn conjugate(self) -> Var {
        match self {
            Var::A => Var::Abar,
            Var::Abar => Var::A,
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TwistedElement {
    terms: BTreeMap<TermKey, Scalar>,
}

impl TwistedElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, 0, Monomial::ONE)
    }

    pub fn term(c: Scalar, theta_power: i32, mono: Monomial) -> Self {
        let mut out = Self::zero();
        out.push(TermKey { mono, theta: theta_power }, c);
        out
    }

    /// `c · θ^t · a^p · ā^q`.
    pub fn monomial(c: Scalar, theta_power: i32, p: i32, q: i32) -> Self {
        Self::term(c, theta_power, Monomial::new(p, q))
    }

    pub fn a() -> Self {
        Self::monomial(Scalar::one(), 0, 1, 0)
    }

    pub fn abar() -> Self {
        Self::monomial(Scalar::one(), 0, 0, 1)
    }

    pub fn omega() -> Self {
        Self::term(Scalar::one(), 0, Monomial::ONE.with_omega(1, 0))
    }

    pub fn omegabar() -> Self {
        Self::term(Scalar::one(), 0, Monomial::ONE.with_omega(0, 1))
    }

    pub fn theta() -> Self {
        Self::term(Scalar::one(), 1, Monomial::ONE)
    }

    /// `exp(-2g·aā/θ)`.
    pub fn gaussian(g: u32) -> Self {
        Self::term(Scalar::one(), 0, Monomial::ONE.with_gaussian(g))
    }

    /// `aω + āω̄`, the first-order deviation of the frame determinant.
    pub fn twist_deviation() -> Self {
        Self::term(Scalar::one(), 0, Monomial::new(1, 0).with_omega(1, 0))
            + Self::term(Scalar::one(), 0, Monomial::new(0, 1).with_omega(0, 1))
    }

    /// `e^k = 1 + k(aω + āω̄)` at first order; `e^{-1} = 1 - aω - āω̄`.
    pub fn e_pow(k: i32) -> Self {
        Self::one() + Self::twist_deviation().scale(&Scalar::int(k as i64))
    }

    pub fn e_inv() -> Self {
        Self::e_pow(-1)
    }

    pub fn e() -> Self {
        Self::e_pow(1)
    }

    fn push(&mut self, key: TermKey, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, Coefficient)> + '_ {
        self.terms.iter().map(|(k, c)| (k.mono, Coefficient { value: c.clone(), theta_power: k.theta }))
    }

    pub(crate) fn raw_terms(&self) -> impl Iterator<Item = (&TermKey, &Scalar)> {
        self.terms.iter()
    }

    pub(crate) fn from_raw(iter: impl IntoIterator<Item = (TermKey, Scalar)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            if k.mono.omega_order() <= 1 {
                out.push(k, c);
            }
        }
        out
    }

    /// Coefficient of `θ^theta_power · mono`, zero when absent.
    pub fn coefficient(&self, mono: Monomial, theta_power: i32) -> Scalar {
        self.terms.get(&TermKey { mono, theta: theta_power }).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_raw(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    /// Multiplies by `θ^k`.
    pub fn scale_theta(&self, k: i32) -> Self {
        Self::from_raw(self.terms.iter().map(|(key, v)| (TermKey { mono: key.mono, theta: key.theta + k }, v.clone())))
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.push(*k, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.push(*k, -c);
        }
        out
    }

    /// Ordinary pointwise product with first-order truncation.
    pub fn mul_pointwise(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                if let Some(mono) = k1.mono.times(&k2.mono) {
                    out.push(TermKey { mono, theta: k1.theta + k2.theta }, c1 * c2);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul_pointwise(self))
    }

    /// Exact partial derivative. The Gaussian weight contributes
    /// `-(2g/θ)` times the conjugate variable.
    pub fn derive(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let m = k.mono;
            let exp = match var {
                Var::A => m.p,
                Var::Abar => m.q,
            };
            if exp != 0 {
                let mut mono = m;
                match var {
                    Var::A => mono.p -= 1,
                    Var::Abar => mono.q -= 1,
                }
                out.push(TermKey { mono, theta: k.theta }, c * &Scalar::int(exp as i64));
            }
            if m.g > 0 {
                let mut mono = m;
                match var {
                    Var::A => mono.q += 1,
                    Var::Abar => mono.p += 1,
                }
                out.push(TermKey { mono, theta: k.theta - 1 }, c * &Scalar::int(-2 * m.g as i64));
            }
        }
        out
    }

    pub fn derive_n(&self, var: Var, n: u32) -> Self {
        (0..n).fold(self.clone(), |acc, _| acc.derive(var))
    }

    /// Drops every term that carries ω or ω̄.
    pub fn limit_omega_zero(&self) -> Self {
        Self::from_raw(self.terms.iter().filter(|(k, _)| k.mono.omega_order() == 0).map(|(k, c)| (*k, c.clone())))
    }

    /// Terms linear in ω or ω̄.
    pub fn first_order_part(&self) -> Self {
        self.sub(&self.limit_omega_zero())
    }

    /// Laurent inverse to first order. Requires the ω⁰ part to be a single
    /// monomial without Gaussian weight.
    pub fn invert_unit(&self) -> Result<Self, AlgebraError> {
        let lead = self.limit_omega_zero();
        let mut it = lead.terms.iter();
        let (key, c) = match (it.next(), it.next()) {
            (Some(t), None) => t,
            (None, _) => return Err(AlgebraError::NotAUnit("zero leading part".into())),
            _ => return Err(AlgebraError::NotAUnit("leading part has several terms".into())),
        };
        if key.mono.g > 0 {
            return Err(AlgebraError::NotAUnit("leading part carries a gaussian weight".into()));
        }
        let inv_c = c.inv().expect("nonzero by canonical form");
        let lead_inv = Self::term(inv_c, -key.theta, Monomial::new(-key.mono.p, -key.mono.q));
        let h = self.first_order_part();
        // (L + h)^{-1} = L^{-1} - L^{-1} h L^{-1}
        Ok(&lead_inv - &lead_inv.mul_pointwise(&h).mul_pointwise(&lead_inv))
    }

    /// Image under a ↔ ā, ω ↔ ω̄.
    pub fn mirrored(&self) -> Self {
        Self::from_raw(self.terms.iter().map(|(k, c)| (TermKey { mono: k.mono.mirrored(), theta: k.theta }, c.clone())))
    }

    /// True when no term has a Gaussian weight or a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|k| k.mono.g == 0 && k.mono.p >= 0 && k.mono.q >= 0)
    }

    /// Largest total degree `p + q` over the terms (0 for the zero element).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|k| (k.mono.p + k.mono.q).max(0) as u32).max().unwrap_or(0)
    }

    /// True when no term depends on a, ā or carries a Gaussian weight.
    pub fn is_coordinate_free(&self) -> bool {
        self.terms.keys().all(|k| k.mono.g == 0 && k.mono.p == 0 && k.mono.q == 0)
    }

    /// Gaussian weights present, ascending.
    pub fn gaussian_weights(&self) -> Vec<u32> {
        let mut gs: Vec<u32> = self.terms.keys().map(|k| k.mono.g).collect();
        gs.dedup();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Divides out `exp(-2g·aā/θ)`; every term must carry exactly weight `g`.
    pub fn strip_gaussian(&self, g: u32) -> Result<Self, AlgebraError> {
        if self.terms.keys().any(|k| k.mono.g != g) {
            return Err(AlgebraError::GaussianMismatch);
        }
        Ok(Self::from_raw(
            self.terms.iter().map(|(k, c)| (TermKey { mono: k.mono.with_gaussian(0), theta: k.theta }, c.clone())),
        ))
    }

    /// Multiplies by `exp(-2g·aā/θ)`.
    pub fn with_gaussian(&self, g: u32) -> Self {
        self.mul_pointwise(&Self::gaussian(g))
    }

    /// Replaces every coefficient by its complex conjugate.
    pub fn conj_coefficients(&self) -> Self {
        Self::from_raw(self.terms.iter().map(|(k, c)| (*k, c.conj())))
    }
}

impl fmt::Debug for TwistedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwistedElement({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&TwistedElement> for &TwistedElement {
            type Output = TwistedElement;
            fn $method(self, rhs: &TwistedElement) -> TwistedElement {
                TwistedElement::$inner(self, rhs)
            }
        }
        impl $trait<TwistedElement> for TwistedElement {
            type Output = TwistedElement;
            fn $method(self, rhs: TwistedElement) -> TwistedElement {
                TwistedElement::$inner(&self, &rhs)
            }
        }
        impl $trait<&TwistedElement> for TwistedElement {
            type Output = TwistedElement;
            fn $method(self, rhs: &TwistedElement) -> TwistedElement {
                TwistedElement::$inner(&self, rhs)
            }
        }
        impl $trait<TwistedElement> for &TwistedElement {
            type Output = TwistedElement;
            fn $method(self, rhs: TwistedElement) -> TwistedElement {
                TwistedElement::$inner(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, mul_pointwise);

impl Neg for TwistedElement {
    type Output = TwistedElement;
    fn neg(self) -> TwistedElement {
        self.scale(&Scalar::int(-1))
    }
}

impl Neg for &TwistedElement {
    type Output = TwistedElement;
    fn neg(self) -> TwistedElement {
        self.scale(&Scalar::int(-1))
    }
}

impl Mul<&Scalar> for &TwistedElement {
    type Output = TwistedElement;
    fn mul(self, rhs: &Scalar) -> TwistedElement {
        self.scale(rhs)
    }
}

impl Mul<Scalar> for TwistedElement {
    type Output = TwistedElement;
    fn mul(self, rhs: Scalar) -> TwistedElement {
        self.scale(&rhs)
    }
}

/// Symbolic normalization `(m! n! θ^{m+n})^{-1/2}` kept outside the body.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormTag {
    pub m: u32,
    pub n: u32,
}

impl NormTag {
    pub const UNIT: NormTag = NormTag { m: 0, n: 0 };
}

/// An element whose true value is `body / sqrt(m! n! θ^{m+n})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedState {
    pub body: TwistedElement,
    pub norm_tag: NormTag,
}

impl NormalizedState {
    pub fn new(body: TwistedElement, norm_tag: NormTag) -> Self {
        Self { body, norm_tag }
    }

    /// The suppressed factor evaluated at a numeric θ.
    pub fn norm_factor(&self, theta: f64) -> f64 {
        let fact = |k: u32| (1..=k).map(f64::from).product::<f64>();
        let NormTag { m, n } = self.norm_tag;
        (fact(m) * fact(n) * theta.powi((m + n) as i32)).sqrt().recip()
    }
}
