//! The oscillator Hamiltonian `āa` acting by star multiplication, three ways.

use serde::{Deserialize, Serialize};

use super::{
    e_inv_star_left, e_inv_star_right, lower_left, lower_right, raise_left, raise_right, star_series, ActionSide,
};
use crate::algebra::{coord_images, RootTwoScaled, TwistedElement};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonianMethod {
    /// Series product with the polynomial `āa`.
    Series,
    /// The second-order differential operators `μ₁/2`, `μ₂/2` in real coordinates.
    MuOperator,
    /// `ā⋆(a⋆f) + (θ/2)(e^{-1}⋆f)` and its mirror.
    Bracket,
}

impl HamiltonianMethod {
    pub const ALL: [HamiltonianMethod; 3] =
        [HamiltonianMethod::Series, HamiltonianMethod::MuOperator, HamiltonianMethod::Bracket];

    pub fn as_str(self) -> &'static str {
        match self {
            HamiltonianMethod::Series => "series",
            HamiltonianMethod::MuOperator => "mu_operator",
            HamiltonianMethod::Bracket => "bracket",
        }
    }
}

impl std::str::FromStr for HamiltonianMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "series" => Ok(Self::Series),
            "mu_operator" | "mu" => Ok(Self::MuOperator),
            "bracket" => Ok(Self::Bracket),
            other => Err(format!("unknown hamiltonian method `{other}`")),
        }
    }
}

fn abar_a() -> TwistedElement {
    TwistedElement::monomial(Scalar::one(), 0, 1, 1)
}

/// `μ/2` applied to `f`, where for the left action
/// `μ₁ = (x¹)² + (x²)² + (iθe^{-1}x¹ - θ²ω¹₁₂/4)∂₂ - (iθe^{-1}x² - θ²ω²₁₂/4)∂₁
///       - (θ²/4)e^{-2}(∂₁² + ∂₂²)`
/// and `μ₂` flips the sign of both first-derivative terms.
fn mu_operator(f: &TwistedElement, side: ActionSide) -> TwistedElement {
    let c = coord_images();
    let i_theta_e_inv = TwistedElement::e_inv().scale_theta(1).scale(&Scalar::i());
    let quarter_theta2 = |w: &RootTwoScaled| w.map(|b| b.scale_theta(2).scale(&Scalar::ratio(1, 4)));

    let radius = c.x1.mul(&c.x1).add(&c.x2.mul(&c.x2)).expect("exact");
    let coeff2 = c.x1.mul_exact(&i_theta_e_inv).sub(&quarter_theta2(&c.omega1)).expect("same scaling");
    let coeff1 = c.x2.mul_exact(&i_theta_e_inv).sub(&quarter_theta2(&c.omega2)).expect("same scaling");
    let first_order = coeff2.mul(&c.d2.apply(f)).sub(&coeff1.mul(&c.d1.apply(f))).expect("exact");
    let laplacian = c.d1.apply_scaled(&c.d1.apply(f)).add(&c.d2.apply_scaled(&c.d2.apply(f))).expect("exact");
    let e_inv2 = TwistedElement::e_pow(-2).scale_theta(2).scale(&Scalar::ratio(1, 4));

    let sign = match side {
        ActionSide::Left => Scalar::one(),
        ActionSide::Right => Scalar::int(-1),
    };
    let mu = radius.mul_exact(f).body + first_order.body.scale(&sign) - e_inv2 * laplacian.body;
    mu.scale(&Scalar::ratio(1, 2))
}

/// `H⋆f`.
pub fn hamiltonian_left(f: &TwistedElement, method: HamiltonianMethod) -> TwistedElement {
    match method {
        HamiltonianMethod::Series => star_series(&abar_a(), f, ActionSide::Left).expect("āa is polynomial"),
        HamiltonianMethod::MuOperator => mu_operator(f, ActionSide::Left),
        HamiltonianMethod::Bracket => {
            raise_left(&lower_left(f)) + e_inv_star_left(f).scale_theta(1).scale(&Scalar::ratio(1, 2))
        }
    }
}

/// `f⋆H`.
pub fn hamiltonian_right(f: &TwistedElement, method: HamiltonianMethod) -> TwistedElement {
    match method {
        HamiltonianMethod::Series => star_series(&abar_a(), f, ActionSide::Right).expect("āa is polynomial"),
        HamiltonianMethod::MuOperator => mu_operator(f, ActionSide::Right),
        HamiltonianMethod::Bracket => {
            raise_right(&lower_right(f)) + e_inv_star_right(f).scale_theta(1).scale(&Scalar::ratio(1, 2))
        }
    }
}

/// `H⋆f` for `ActionSide::Left`, `f⋆H` for `ActionSide::Right`.
pub fn hamiltonian(f: &TwistedElement, side: ActionSide, method: HamiltonianMethod) -> TwistedElement {
    match side {
        ActionSide::Left => hamiltonian_left(f, method),
        ActionSide::Right => hamiltonian_right(f, method),
    }
}
