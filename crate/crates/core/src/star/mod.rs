//! The twisted star product at first order in ω.
//!
//! `f⋆g = m[ Σ_n Σ_k (-1)^{n-k}/(k!(n-k)!) (θe^{-1}/2)^n
//!          (∂_a⊗∂_ā)^k (∂_ā⊗∂_a)^{n-k} (f⊗g) ]`
//!
//! The factor `(θe^{-1}/2)^n` is applied after the bi-differential operator,
//! at the outer point. The series is only evaluated when one factor is a
//! polynomial, where it terminates at that factor's total degree.

mod frame;
mod hamiltonian;
mod moyal;

use serde::{Deserialize, Serialize};

use crate::algebra::{coord_images, RootTwoScaled, TwistedElement, Var};
use crate::error::AlgebraError;
use crate::scalar::Scalar;

pub use frame::{
    associator, frame_component, jacobi_check, jacobi_component, leibniz_residual, theta_tilde, vector_field_apply,
    vector_field_apply_scaled,
};
pub use hamiltonian::{hamiltonian, hamiltonian_left, hamiltonian_right, HamiltonianMethod};
pub use moyal::{moyal_reference, weyl_word_action};

/// Which side the known factor multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionSide {
    /// `P ⋆ f`
    Left,
    /// `f ⋆ P`
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    A,
    Abar,
    X1,
    X2,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::Abar, Generator::X1, Generator::X2];

    /// The generator as a (√2-scaled) element.
    pub fn element(self) -> RootTwoScaled {
        match self {
            Generator::A => TwistedElement::a().into(),
            Generator::Abar => TwistedElement::abar().into(),
            Generator::X1 => coord_images().x1,
            Generator::X2 => coord_images().x2,
        }
    }
}

/// `(θ/2) e^{-1}`
pub(crate) fn half_theta_e_inv() -> TwistedElement {
    TwistedElement::e_inv().scale_theta(1).scale(&Scalar::ratio(1, 2))
}

/// `a⋆f = (a + (θe^{-1}/2)∂_ā) f`
pub fn lower_left(f: &TwistedElement) -> TwistedElement {
    TwistedElement::a() * f + half_theta_e_inv() * f.derive(Var::Abar)
}

/// `ā⋆f = (ā - (θe^{-1}/2)∂_a) f`
pub fn raise_left(f: &TwistedElement) -> TwistedElement {
    TwistedElement::abar() * f - half_theta_e_inv() * f.derive(Var::A)
}

/// `f⋆a = (a - (θe^{-1}/2)∂_ā) f`
pub fn raise_right(f: &TwistedElement) -> TwistedElement {
    TwistedElement::a() * f - half_theta_e_inv() * f.derive(Var::Abar)
}

/// `f⋆ā = (ā + (θe^{-1}/2)∂_a) f`
pub fn lower_right(f: &TwistedElement) -> TwistedElement {
    TwistedElement::abar() * f + half_theta_e_inv() * f.derive(Var::A)
}

/// `x^μ⋆f` (or `f⋆x^μ`) from the first-order operators
/// `x¹⋆f = x¹f + (i/2)θe^{-1}∂₂f`, `x²⋆f = x²f - (i/2)θe^{-1}∂₁f`.
fn coord_action(mu: usize, f: &TwistedElement, side: ActionSide) -> RootTwoScaled {
    let images = coord_images();
    let (deriv, sign) = match mu {
        1 => (&images.d2, 1),
        _ => (&images.d1, -1),
    };
    let sign = match side {
        ActionSide::Left => sign,
        ActionSide::Right => -sign,
    };
    let correction = deriv.apply(f).mul_exact(&half_theta_e_inv()).scale(&(&Scalar::i() * &Scalar::int(sign)));
    images.x(mu).mul_exact(f).add(&correction).expect("both parts carry one inverse √2")
}

pub fn star_gen_left(gen: Generator, f: &TwistedElement) -> RootTwoScaled {
    match gen {
        Generator::A => lower_left(f).into(),
        Generator::Abar => raise_left(f).into(),
        Generator::X1 => coord_action(1, f, ActionSide::Left),
        Generator::X2 => coord_action(2, f, ActionSide::Left),
    }
}

pub fn star_gen_right(f: &TwistedElement, gen: Generator) -> RootTwoScaled {
    match gen {
        Generator::A => raise_right(f).into(),
        Generator::Abar => lower_right(f).into(),
        Generator::X1 => coord_action(1, f, ActionSide::Right),
        Generator::X2 => coord_action(2, f, ActionSide::Right),
    }
}

/// `e^{-1}⋆f` assembled from generator actions: `f - ω(a⋆f) - ω̄(ā⋆f)`.
pub fn e_inv_star_left(f: &TwistedElement) -> TwistedElement {
    f - TwistedElement::omega() * lower_left(f) - TwistedElement::omegabar() * raise_left(f)
}

/// `f⋆e^{-1} = f - ω(f⋆a) - ω̄(f⋆ā)`.
pub fn e_inv_star_right(f: &TwistedElement) -> TwistedElement {
    f - TwistedElement::omega() * raise_right(f) - TwistedElement::omegabar() * lower_right(f)
}

fn derivative_table(f: &TwistedElement, order: u32) -> Vec<Vec<TwistedElement>> {
    // table[i][j] = ∂_a^i ∂_ā^j f for i + j <= order
    let mut table = Vec::with_capacity(order as usize + 1);
    let mut da = f.clone();
    for i in 0..=order {
        let mut row = Vec::with_capacity((order - i) as usize + 1);
        let mut cur = da.clone();
        for _ in 0..=(order - i) {
            row.push(cur.clone());
            cur = cur.derive(Var::Abar);
        }
        table.push(row);
        da = da.derive(Var::A);
    }
    table
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// Series star product with polynomial `p`; `side` picks `p⋆f` or `f⋆p`.
pub fn star_series(p: &TwistedElement, f: &TwistedElement, side: ActionSide) -> Result<TwistedElement, AlgebraError> {
    if !p.is_polynomial() {
        return Err(AlgebraError::NonTerminating(format!("polynomial factor required, got {p}")));
    }
    let order = p.degree();
    let dp = derivative_table(p, order);
    let df = derivative_table(f, order);
    let mut out = TwistedElement::zero();
    for n in 0..=order {
        let mut inner = TwistedElement::zero();
        for k in 0..=n {
            let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
            let weight = Scalar::int(sign * binomial(n, k));
            // first factor gets ∂_a^k ∂_ā^{n-k}, second ∂_ā^k ∂_a^{n-k}
            let term = match side {
                ActionSide::Left => &dp[k as usize][(n - k) as usize] * &df[(n - k) as usize][k as usize],
                ActionSide::Right => &df[k as usize][(n - k) as usize] * &dp[(n - k) as usize][k as usize],
            };
            if !term.is_zero() {
                inner = inner + term.scale(&weight);
            }
        }
        if inner.is_zero() {
            continue;
        }
        // (θe^{-1}/2)^n / n!
        let prefactor = TwistedElement::e_pow(-(n as i32))
            .scale_theta(n as i32)
            .scale(&Scalar::ratio(1, (1i64 << n) * factorial(n)));
        out = out + prefactor * inner;
    }
    Ok(out)
}

/// `f⋆g`, using whichever factor is polynomial to terminate the series.
pub fn star(f: &TwistedElement, g: &TwistedElement) -> Result<TwistedElement, AlgebraError> {
    if f.is_polynomial() {
        star_series(f, g, ActionSide::Left)
    } else if g.is_polynomial() {
        star_series(g, f, ActionSide::Right)
    } else {
        Err(AlgebraError::NonTerminating(format!("neither {f} nor {g} is polynomial")))
    }
}

pub fn star_scaled(f: &RootTwoScaled, g: &RootTwoScaled) -> Result<RootTwoScaled, AlgebraError> {
    let body = star(&f.body, &g.body)?;
    Ok(RootTwoScaled::new(body, f.sqrt2_power + g.sqrt2_power))
}

/// `P⋆Q - Q⋆P`.
pub fn commutator_star(p: &TwistedElement, q: &TwistedElement) -> Result<TwistedElement, AlgebraError> {
    Ok(star(p, q)? - star(q, p)?)
}

pub fn commutator_scaled(p: &RootTwoScaled, q: &RootTwoScaled) -> Result<RootTwoScaled, AlgebraError> {
    star_scaled(p, q)?.sub(&star_scaled(q, p)?)
}

pub fn anticommutator_scaled(p: &RootTwoScaled, q: &RootTwoScaled) -> Result<RootTwoScaled, AlgebraError> {
    star_scaled(p, q)?.add(&star_scaled(q, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f00_right() -> TwistedElement {
        // 2 G (1 - (2a²ā/θ)ω - (aā²/θ)ω̄)
        "2 G^1 - 2 θ^-1 a^1 abar^2 wbar^1 G^1 - 4 θ^-1 a^2 abar^1 w^1 G^1".parse().unwrap()
    }

    fn sample() -> TwistedElement {
        "3/2 a^2 abar^-1 + 1/3 θ^1 abar^3 w^1 G^1 - 2 a^1 wbar^1 + (0+1i) θ^-1 a^4 G^2".parse().unwrap()
    }

    #[test]
    fn commutator_of_ladder_functions() {
        let c = commutator_star(&TwistedElement::a(), &TwistedElement::abar()).unwrap();
        assert_eq!(c, TwistedElement::e_inv().scale_theta(1));
        assert!(commutator_star(&TwistedElement::a(), &TwistedElement::a()).unwrap().is_zero());
    }

    #[test]
    fn coordinate_commutator() {
        let x1 = Generator::X1.element();
        let x2 = Generator::X2.element();
        let c = commutator_scaled(&x1, &x2).unwrap();
        let expected = TwistedElement::e_inv().scale_theta(1).scale(&Scalar::i());
        assert_eq!(c.as_exact(), Some(&expected));
    }

    #[test]
    fn annihilates_right_ground_state() {
        assert!(lower_left(&f00_right()).is_zero());
        assert!(star_gen_left(Generator::A, &f00_right()).is_zero());
    }

    #[test]
    fn gaussian_raised_at_zero_twist() {
        // ā⋆(2G) = 4āG when ω = 0
        let two_g = TwistedElement::gaussian(1).scale(&Scalar::int(2));
        let out = raise_left(&two_g).limit_omega_zero();
        assert_eq!(out, "4 abar^1 G^1".parse().unwrap());
    }

    #[test]
    fn unit_behaviour() {
        assert_eq!(lower_left(&TwistedElement::one()), TwistedElement::a());
        assert_eq!(raise_right(&TwistedElement::one()), TwistedElement::a());
        let f = sample();
        assert_eq!(star_series(&TwistedElement::one(), &f, ActionSide::Left).unwrap(), f);
        assert_eq!(star_series(&TwistedElement::one(), &f, ActionSide::Right).unwrap(), f);
    }

    #[test]
    fn series_matches_generator_actions() {
        let f = sample();
        for gen in Generator::ALL {
            let p = gen.element();
            let left = RootTwoScaled::new(star_series(&p.body, &f, ActionSide::Left).unwrap(), p.sqrt2_power);
            let right = RootTwoScaled::new(star_series(&p.body, &f, ActionSide::Right).unwrap(), p.sqrt2_power);
            assert_eq!(left, star_gen_left(gen, &f), "{gen:?} left");
            assert_eq!(right, star_gen_right(&f, gen), "{gen:?} right");
        }
    }

    #[test]
    fn coordinate_anticommutator_is_twice_product() {
        let f: RootTwoScaled = sample().into();
        for gen in [Generator::X1, Generator::X2] {
            let x = gen.element();
            let anti = anticommutator_scaled(&x, &f).unwrap();
            assert_eq!(anti, x.mul(&f).scale(&Scalar::int(2)));
        }
    }

    #[test]
    fn series_rejects_non_polynomials() {
        let g = TwistedElement::gaussian(1);
        assert!(matches!(
            star_series(&g, &TwistedElement::a(), ActionSide::Left),
            Err(AlgebraError::NonTerminating(_))
        ));
        assert!(star(&g, &g).is_err());
        let inv: TwistedElement = "1 a^-1".parse().unwrap();
        assert!(star_series(&inv, &g, ActionSide::Left).is_err());
    }

    #[test]
    fn e_inv_term_by_term_matches_series() {
        let f = sample();
        assert_eq!(e_inv_star_left(&f), star_series(&TwistedElement::e_inv(), &f, ActionSide::Left).unwrap());
        assert_eq!(e_inv_star_right(&f), star_series(&TwistedElement::e_inv(), &f, ActionSide::Right).unwrap());
    }
}
