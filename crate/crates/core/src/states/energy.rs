//! Printed energies of the single-sided states and of the Λ states.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{factorial, u_sequence, StateSide};
use crate::algebra::{Monomial, TwistedElement};
use crate::error::StateError;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EnergyKind {
    /// `𝓔ᴿ_{m0}`
    RightM { m: u32 },
    /// `𝓔ᴸ_{0n}`
    LeftN { n: u32 },
    /// `𝓔ᴿ_{Λ¹¹_{m0}}`, `m > 0`
    Lambda11R { m: u32 },
    /// `𝓔ᴸ_{Λ¹¹_{0n}}`, `n > 0`
    Lambda11L { n: u32 },
    /// `𝓔ᴿ_{Λ^{m-k+1}_{m0}}`, `m ≥ k > 0`
    LambdaMkR { m: u32, k: u32 },
    /// `𝓔ᴸ_{Λ^{n-l+1}_{0n}}`, `n ≥ l > 0`
    LambdaNlL { n: u32, l: u32 },
}

impl EnergyKind {
    pub fn label(&self) -> String {
        match *self {
            EnergyKind::RightM { m } => format!("E^R_{{{m}0}}"),
            EnergyKind::LeftN { n } => format!("E^L_{{0{n}}}"),
            EnergyKind::Lambda11R { m } => format!("E^R_Lambda11_{{{m}0}}"),
            EnergyKind::Lambda11L { n } => format!("E^L_Lambda11_{{0{n}}}"),
            EnergyKind::LambdaMkR { m, k } => format!("E^R_Lambda_{{{m}0}}^{{k={k}}}"),
            EnergyKind::LambdaNlL { n, l } => format!("E^L_Lambda_{{0{n}}}^{{l={l}}}"),
        }
    }
}

/// `Σ_{j=1}^{k} (m + 4j + 1)/(m - j)!`, zero when `k = 0`; needs `k ≤ m`.
pub fn lambda_sum(m: u32, k: u32) -> BigRational {
    assert!(k <= m, "sum index {k} exceeds {m}");
    (1..=k)
        .map(|j| BigRational::new(BigInt::from(m + 4 * j + 1), factorial(m - j)))
        .fold(BigRational::from_integer(BigInt::from(0)), |acc, x| acc + x)
}

fn term(c: Scalar, theta: i32, p: i32, q: i32, r: u8, s: u8) -> TwistedElement {
    TwistedElement::term(c, theta, Monomial::new(p, q).with_omega(r, s))
}

fn int(n: i64) -> Scalar {
    Scalar::int(n)
}

fn half_theta(inner: TwistedElement) -> TwistedElement {
    inner.scale_theta(1).scale(&Scalar::ratio(1, 2))
}

/// `(θ/2)[2m+1 - maω - (3m+2)āω̄ - m²θω/(4ā) + θωU_m/(2^m ā)]`
fn right_m(m: u32) -> TwistedElement {
    let mi = m as i64;
    let u_over = Scalar::from_rational(u_sequence(m) / BigRational::from_integer(BigInt::from(1) << m));
    half_theta(
        term(int(2 * mi + 1), 0, 0, 0, 0, 0)
            + term(int(-mi), 0, 1, 0, 1, 0)
            + term(int(-(3 * mi + 2)), 0, 0, 1, 0, 1)
            + term(Scalar::ratio(-mi * mi, 4), 1, 0, -1, 1, 0)
            + term(u_over, 1, 0, -1, 1, 0),
    )
}

/// `(θ/2)[1 - (āω̄/2)(Σ_{j=1}^m (m+4j+1)/(m-j)! + 4)]`
fn lambda11_right(m: u32) -> TwistedElement {
    let s = Scalar::from_rational(lambda_sum(m, m)) + int(4);
    half_theta(term(int(1), 0, 0, 0, 0, 0) + term(s * Scalar::ratio(-1, 2), 0, 0, 1, 0, 1))
}

/// The (m-k+1)-particle energy:
/// `(θ/2){2(m-k)+1 - (m-k)aω + (āω̄/2)[(m-k-1)(m-k)!Σ_k - (m-k)(m+4k+6) - 4]
///  - (m-k)(m-2k)θω/(4ā) + (m-k+1)(m-k)θωU_m/(m 2^{m+1} ā)}`
fn lambda_mk_right(m: u32, k: u32) -> TwistedElement {
    let (mi, ki) = (m as i64, k as i64);
    let d = mi - ki;
    let sum = lambda_sum(m, k);
    let bracket = BigRational::from_integer(BigInt::from(d - 1) * factorial(m - k)) * sum
        - BigRational::from_integer(BigInt::from(d * (mi + 4 * ki + 6) + 4));
    let u_coeff = u_sequence(m) * BigRational::new(BigInt::from((d + 1) * d), BigInt::from(mi) << (m + 1));
    half_theta(
        term(int(2 * d + 1), 0, 0, 0, 0, 0)
            + term(int(-d), 0, 1, 0, 1, 0)
            + term(Scalar::from_rational(bracket) * Scalar::ratio(1, 2), 0, 0, 1, 0, 1)
            + term(Scalar::ratio(-d * (mi - 2 * ki), 4), 1, 0, -1, 1, 0)
            + term(Scalar::from_rational(u_coeff), 1, 0, -1, 1, 0),
    )
}

/// Printed energy as an element. Left-side formulas are the printed
/// mirror images of the right-side ones.
pub fn paper_energy(kind: EnergyKind) -> Result<TwistedElement, StateError> {
    let out_of_range = || StateError::IndexOutOfRange(format!("{kind:?}"));
    Ok(match kind {
        EnergyKind::RightM { m } => right_m(m),
        EnergyKind::LeftN { n } => StateSide::Left.orient(right_m(n)),
        EnergyKind::Lambda11R { m } if m > 0 => lambda11_right(m),
        EnergyKind::Lambda11L { n } if n > 0 => StateSide::Left.orient(lambda11_right(n)),
        EnergyKind::LambdaMkR { m, k } if m >= k && k > 0 => lambda_mk_right(m, k),
        EnergyKind::LambdaNlL { n, l } if n >= l && l > 0 => StateSide::Left.orient(lambda_mk_right(n, l)),
        _ => return Err(out_of_range()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_right_energy() {
        let e = paper_energy(EnergyKind::RightM { m: 1 }).unwrap();
        let expected: TwistedElement =
            "3/2 θ^1 - 1/2 θ^1 a^1 w^1 - 5/2 θ^1 abar^1 wbar^1 - 1/8 θ^2 abar^-1 w^1".parse().unwrap();
        assert_eq!(e, expected);
    }

    #[test]
    fn ground_energies() {
        let r: TwistedElement = "1/2 θ^1 - 1 θ^1 abar^1 wbar^1".parse().unwrap();
        assert_eq!(paper_energy(EnergyKind::RightM { m: 0 }).unwrap(), r);
        assert_eq!(paper_energy(EnergyKind::LeftN { n: 0 }).unwrap(), r.mirrored());
    }

    #[test]
    fn index_ranges() {
        assert!(paper_energy(EnergyKind::Lambda11R { m: 0 }).is_err());
        assert!(paper_energy(EnergyKind::LambdaMkR { m: 2, k: 3 }).is_err());
        assert!(paper_energy(EnergyKind::LambdaNlL { n: 2, l: 0 }).is_err());
    }

    #[test]
    fn limits_and_specialization() {
        for m in 1..=6u32 {
            for k in 1..=m {
                let e = paper_energy(EnergyKind::LambdaMkR { m, k }).unwrap();
                let limit = TwistedElement::theta().scale(&Scalar::ratio(2 * (m - k) as i64 + 1, 2));
                assert_eq!(e.limit_omega_zero(), limit);
            }
            assert_eq!(
                paper_energy(EnergyKind::LambdaMkR { m, k: m }).unwrap(),
                paper_energy(EnergyKind::Lambda11R { m }).unwrap()
            );
        }
    }

    #[test]
    fn sums() {
        assert_eq!(lambda_sum(3, 0), BigRational::from_integer(BigInt::from(0)));
        // m = 1: (1 + 4 + 1)/0! = 6
        assert_eq!(lambda_sum(1, 1), BigRational::from_integer(BigInt::from(6)));
        // m = 2: 7/1! + 11/0! = 18
        assert_eq!(lambda_sum(2, 2), BigRational::from_integer(BigInt::from(18)));
    }
}
