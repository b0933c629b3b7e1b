//! Exact Gaussian rationals `re + i·im` with arbitrary-precision parts.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den`; panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(BigInt::from(num), BigInt::from(den)), BigRational::zero())
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Self::new(&self.re / &norm, -(&self.im / &norm)))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // huge parts: scale down by a common power of two
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_rational(&self.re * &rhs.re);
        }
        Scalar::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Real values print as `num/den`; complex ones as `(re+imi)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{}i)", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError::BadCoefficient(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) else {
            return Ok(Scalar::from_rational(parse_rational(s)?));
        };
        let body = inner.strip_suffix('i').ok_or_else(|| ParseError::BadCoefficient(s.to_string()))?;
        // split at the sign separating the real and imaginary parts
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| ParseError::BadCoefficient(s.to_string()))?;
        let (re, im) = body.split_at(split);
        let im = im.strip_prefix('+').unwrap_or(im);
        Ok(Scalar::new(parse_rational(re)?, parse_rational(im)?))
    }
}
