//! Seeded random elements for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Monomial, TwistedElement};
use crate::scalar::Scalar;

/// Shape of the generated elements.
#[derive(Clone, Copy, Debug)]
pub struct SampleShape {
    pub max_terms: usize,
    pub min_power: i32,
    pub max_power: i32,
    pub max_gaussian: u32,
    pub min_theta: i32,
    pub max_theta: i32,
    pub complex: bool,
    pub twist: bool,
}

impl SampleShape {
    /// Laurent–Gaussian elements with complex coefficients.
    pub const GENERAL: SampleShape = SampleShape {
        max_terms: 5,
        min_power: -2,
        max_power: 3,
        max_gaussian: 2,
        min_theta: -1,
        max_theta: 2,
        complex: true,
        twist: true,
    };

    /// Polynomials in `a, ā` of degree at most 3 per variable.
    pub const POLYNOMIAL: SampleShape = SampleShape {
        max_terms: 4,
        min_power: 0,
        max_power: 3,
        max_gaussian: 0,
        min_theta: 0,
        max_theta: 1,
        complex: true,
        twist: true,
    };

    /// Gaussian-class elements: every term carries a weight of at least 1.
    pub const GAUSSIAN: SampleShape = SampleShape {
        max_terms: 4,
        min_power: 0,
        max_power: 3,
        max_gaussian: 2,
        min_theta: -1,
        max_theta: 1,
        complex: true,
        twist: true,
    };

    pub fn untwisted(self) -> Self {
        Self { twist: false, ..self }
    }
}

/// Derives an independent generator for a named check.
pub fn rng_for(seed: u64, label: &str) -> ChaCha8Rng {
    // FNV-1a over the label keeps streams independent and reproducible
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn small_rational(rng: &mut impl Rng) -> Scalar {
    let num = rng.gen_range(-6i64..=6);
    let den = rng.gen_range(1i64..=4);
    Scalar::ratio(num, den)
}

fn coefficient(rng: &mut impl Rng, complex: bool) -> Scalar {
    loop {
        let re = small_rational(rng);
        let c = if complex && rng.gen_bool(0.4) { re + &small_rational(rng) * &Scalar::i() } else { re };
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn element(rng: &mut impl Rng, shape: SampleShape) -> TwistedElement {
    let n = rng.gen_range(1..=shape.max_terms);
    let mut out = TwistedElement::zero();
    for _ in 0..n {
        let (r, s) = if shape.twist {
            match rng.gen_range(0..3) {
                0 => (0, 0),
                1 => (1, 0),
                _ => (0, 1),
            }
        } else {
            (0, 0)
        };
        let g = rng.gen_range(0..=shape.max_gaussian);
        let mono = Monomial::new(
            rng.gen_range(shape.min_power..=shape.max_power),
            rng.gen_range(shape.min_power..=shape.max_power),
        )
        .with_omega(r, s)
        .with_gaussian(g);
        let theta = rng.gen_range(shape.min_theta..=shape.max_theta);
        out = out + TwistedElement::term(coefficient(rng, shape.complex), theta, mono);
    }
    out
}

pub fn gaussian_element(rng: &mut impl Rng) -> TwistedElement {
    let body = element(rng, SampleShape { max_gaussian: 1, ..SampleShape::GAUSSIAN });
    // shift every weight up by one so the whole element is integrable
    body.with_gaussian(1)
}

pub fn polynomial(rng: &mut impl Rng) -> TwistedElement {
    element(rng, SampleShape::POLYNOMIAL)
}

/// A unit: nonzero single leading monomial without weight, plus random
/// first-order corrections.
pub fn unit(rng: &mut impl Rng) -> TwistedElement {
    let lead = TwistedElement::term(
        coefficient(rng, true),
        rng.gen_range(-1..=1),
        Monomial::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2)),
    );
    let correction = element(rng, SampleShape::GENERAL).first_order_part();
    lead + correction
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_streams() {
        let a = element(&mut rng_for(7, "x"), SampleShape::GENERAL);
        let b = element(&mut rng_for(7, "x"), SampleShape::GENERAL);
        assert_eq!(a, b);
    }

    #[test]
    fn shapes_respected() {
        let mut rng = rng_for(1, "shapes");
        for _ in 0..50 {
            assert!(polynomial(&mut rng).is_polynomial());
            let g = gaussian_element(&mut rng);
            assert!(g.gaussian_weights().iter().all(|&w| w >= 1));
            let u = unit(&mut rng);
            assert!(u.invert_unit().is_ok());
        }
    }
}
