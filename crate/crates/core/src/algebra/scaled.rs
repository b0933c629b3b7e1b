//! Elements carrying a power of √2 outside the rational body.
//!
//! The real coordinates are `x¹ = (a+ā)/√2`, `x² = (a-ā)/(i√2)`, so single
//! coordinate images need one factor `1/√2`; even products fold it back
//! into rational coefficients.

use std::fmt;

use super::{TwistedElement, Var};
use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// Value `body · (√2)^sqrt2_power`, with `sqrt2_power ∈ {0, -1}` after
/// normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootTwoScaled {
    pub body: TwistedElement,
    pub sqrt2_power: i32,
}

impl RootTwoScaled {
    pub fn new(body: TwistedElement, sqrt2_power: i32) -> Self {
        // (√2)^k = 2^{(k+1)/2} / √2 for odd k, 2^{k/2} for even k
        let (fold, rest) =
            if sqrt2_power.rem_euclid(2) == 0 { (sqrt2_power / 2, 0) } else { ((sqrt2_power + 1).div_euclid(2), -1) };
        let factor = if fold >= 0 { Scalar::int(1i64 << fold) } else { Scalar::ratio(1, 1i64 << (-fold)) };
        let body = body.scale(&factor);
        let sqrt2_power = if body.is_zero() { 0 } else { rest };
        Self { body, sqrt2_power }
    }

    pub fn exact(body: TwistedElement) -> Self {
        Self { body, sqrt2_power: 0 }
    }

    pub fn zero() -> Self {
        Self::exact(TwistedElement::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// The rational element when no √2 remains.
    pub fn as_exact(&self) -> Option<&TwistedElement> {
        (self.sqrt2_power == 0).then_some(&self.body)
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.sqrt2_power != other.sqrt2_power {
            return Err(AlgebraError::MixedScaling(self.sqrt2_power, other.sqrt2_power));
        }
        Ok(Self::new(&self.body + &other.body, self.sqrt2_power))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { body: -&self.body, sqrt2_power: self.sqrt2_power }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.body.scale(c), self.sqrt2_power)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.body * &other.body, self.sqrt2_power + other.sqrt2_power)
    }

    pub fn mul_exact(&self, other: &TwistedElement) -> Self {
        Self::new(&self.body * other, self.sqrt2_power)
    }

    pub fn derive(&self, var: Var) -> Self {
        Self::new(self.body.derive(var), self.sqrt2_power)
    }

    pub fn map(&self, f: impl FnOnce(&TwistedElement) -> TwistedElement) -> Self {
        Self::new(f(&self.body), self.sqrt2_power)
    }

    pub fn limit_omega_zero(&self) -> Self {
        self.map(TwistedElement::limit_omega_zero)
    }
}

impl From<TwistedElement> for RootTwoScaled {
    fn from(body: TwistedElement) -> Self {
        Self::exact(body)
    }
}

impl fmt::Display for RootTwoScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt2_power == 0 {
            write!(f, "{}", self.body)
        } else {
            write!(f, "(√2)^{} · [{}]", self.sqrt2_power, self.body)
        }
    }
}

/// A real-coordinate derivative `∂_μ = (√2)^k (ca ∂_a + cabar ∂_ā)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeImage {
    pub coeff_a: Scalar,
    pub coeff_abar: Scalar,
    pub sqrt2_power: i32,
}

impl DerivativeImage {
    pub fn apply(&self, f: &TwistedElement) -> RootTwoScaled {
        let body = f.derive(Var::A).scale(&self.coeff_a) + f.derive(Var::Abar).scale(&self.coeff_abar);
        RootTwoScaled::new(body, self.sqrt2_power)
    }

    pub fn apply_scaled(&self, f: &RootTwoScaled) -> RootTwoScaled {
        let inner = self.apply(&f.body);
        RootTwoScaled::new(inner.body, inner.sqrt2_power + f.sqrt2_power)
    }
}

/// Images of the real coordinates, their derivatives and the twist
/// constants in the `(a, ā, ω, ω̄)` variables.
#[derive(Clone, Debug)]
pub struct CoordImages {
    pub x1: RootTwoScaled,
    pub x2: RootTwoScaled,
    pub d1: DerivativeImage,
    pub d2: DerivativeImage,
    /// ω¹₁₂ = (ω - ω̄)/(i√2)
    pub omega1: RootTwoScaled,
    /// ω²₁₂ = (ω + ω̄)/√2
    pub omega2: RootTwoScaled,
}

impl CoordImages {
    pub fn x(&self, mu: usize) -> &RootTwoScaled {
        match mu {
            1 => &self.x1,
            2 => &self.x2,
            _ => panic!("coordinate index must be 1 or 2, got {mu}"),
        }
    }

    pub fn d(&self, mu: usize) -> &DerivativeImage {
        match mu {
            1 => &self.d1,
            2 => &self.d2,
            _ => panic!("coordinate index must be 1 or 2, got {mu}"),
        }
    }
}

pub fn coord_images() -> CoordImages {
    let a = TwistedElement::a();
    let abar = TwistedElement::abar();
    let minus_i = -Scalar::i();
    let w = TwistedElement::omega();
    let wbar = TwistedElement::omegabar();
    CoordImages {
        x1: RootTwoScaled::new(&a + &abar, -1),
        x2: RootTwoScaled::new((&a - &abar).scale(&minus_i), -1),
        d1: DerivativeImage { coeff_a: Scalar::one(), coeff_abar: Scalar::one(), sqrt2_power: -1 },
        d2: DerivativeImage { coeff_a: Scalar::i(), coeff_abar: minus_i.clone(), sqrt2_power: -1 },
        omega1: RootTwoScaled::new((&w - &wbar).scale(&minus_i), -1),
        omega2: RootTwoScaled::new(&w + &wbar, -1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_squared() {
        let c = coord_images();
        let r2 = c.x1.mul(&c.x1).add(&c.x2.mul(&c.x2)).unwrap();
        let expected = TwistedElement::monomial(Scalar::int(2), 0, 1, 1);
        assert_eq!(r2.as_exact(), Some(&expected));
    }

    #[test]
    fn coordinate_product() {
        // x¹x² = (a² - ā²)/(2i)
        let c = coord_images();
        let prod = c.x1.mul(&c.x2);
        let a2 = TwistedElement::monomial(Scalar::one(), 0, 2, 0);
        let abar2 = TwistedElement::monomial(Scalar::one(), 0, 0, 2);
        let expected = (a2 - abar2).scale(&Scalar::i().inv().unwrap()).scale(&Scalar::ratio(1, 2));
        assert_eq!(prod.as_exact(), Some(&expected));
    }

    #[test]
    fn laplacian_is_twice_mixed_derivative() {
        let c = coord_images();
        let f: TwistedElement = "3 a^3 abar^2 + 1/2 a^-1 w^1 G^1 - 2 θ^-1 abar^4".parse().unwrap();
        let lap = c.d1.apply_scaled(&c.d1.apply(&f)).add(&c.d2.apply_scaled(&c.d2.apply(&f))).unwrap();
        let expected = f.derive(Var::A).derive(Var::Abar).scale(&Scalar::int(2));
        assert_eq!(lap.as_exact(), Some(&expected));
    }

    #[test]
    fn derivatives_invert_coordinates() {
        let c = coord_images();
        let one = TwistedElement::one();
        for mu in 1..=2 {
            for nu in 1..=2 {
                let d = c.d(mu).apply_scaled(c.x(nu));
                let expected = if mu == nu { one.clone() } else { TwistedElement::zero() };
                assert_eq!(d.as_exact(), Some(&expected), "∂_{mu} x^{nu}");
            }
        }
    }

    #[test]
    fn frame_determinant_from_real_constants() {
        // e^{-1} = 1 + ω¹x² - ω²x¹
        let c = coord_images();
        let det = c.omega1.mul(&c.x2).sub(&c.omega2.mul(&c.x1)).unwrap();
        let det = det.add(&RootTwoScaled::exact(TwistedElement::one())).unwrap();
        assert_eq!(det.as_exact(), Some(&TwistedElement::e_inv()));
    }

    #[test]
    fn normalization_folds_even_powers() {
        let one = TwistedElement::one();
        assert_eq!(RootTwoScaled::new(one.clone(), -2).as_exact(), Some(&one.scale(&Scalar::ratio(1, 2))));
        let s = RootTwoScaled::new(one.clone(), 1);
        assert_eq!(s.sqrt2_power, -1);
        assert_eq!(s.body, one.scale(&Scalar::int(2)));
        assert!(RootTwoScaled::new(one.clone(), -1).add(&one.into()).is_err());
    }
}
