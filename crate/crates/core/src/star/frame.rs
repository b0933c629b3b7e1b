//! Affine frame `e_a^μ = δ_a^μ + ω^μ_{ab} x^b`, its vector fields, and the
//! structural probes built on them (Θ̃, Leibniz, Jacobi, associator).

use super::{commutator_scaled, star, star_scaled};
use crate::algebra::{coord_images, RootTwoScaled, TwistedElement};
use crate::conformance::ConformanceCase;
use crate::error::AlgebraError;

/// `e_a^μ` as an element, for `a, μ ∈ {1, 2}`.
pub fn frame_component(a: usize, mu: usize) -> TwistedElement {
    let c = coord_images();
    let exact = |s: RootTwoScaled| s.as_exact().cloned().expect("ω·x products are rational");
    match (a, mu) {
        (1, 1) => TwistedElement::one() + exact(c.omega1.mul(&c.x2)),
        (1, 2) => exact(c.omega2.mul(&c.x2)),
        (2, 1) => -exact(c.omega1.mul(&c.x1)),
        (2, 2) => TwistedElement::one() - exact(c.omega2.mul(&c.x1)),
        _ => panic!("frame indices must be 1 or 2, got ({a}, {mu})"),
    }
}

/// `X_a f = e_a^μ ∂_μ f`.
pub fn vector_field_apply(index: usize, f: &TwistedElement) -> RootTwoScaled {
    let c = coord_images();
    let t1 = c.d1.apply(f).mul_exact(&frame_component(index, 1));
    let t2 = c.d2.apply(f).mul_exact(&frame_component(index, 2));
    t1.add(&t2).expect("both derivatives carry one inverse √2")
}

pub fn vector_field_apply_scaled(index: usize, f: &RootTwoScaled) -> RootTwoScaled {
    let inner = vector_field_apply(index, &f.body);
    RootTwoScaled::new(inner.body, inner.sqrt2_power + f.sqrt2_power)
}

/// `Θ̃^{μν} = Θ^{ab} e_a^μ e_b^ν` with `Θ = θJ`.
pub fn theta_tilde(mu: usize, nu: usize) -> TwistedElement {
    let det_like = frame_component(1, mu) * frame_component(2, nu) - frame_component(2, mu) * frame_component(1, nu);
    det_like.scale_theta(1)
}

/// `X_a(f⋆g) - (X_a f)⋆g - f⋆(X_a g)`.
pub fn leibniz_residual(index: usize, f: &TwistedElement, g: &TwistedElement) -> Result<RootTwoScaled, AlgebraError> {
    let fg = star(f, g)?;
    let lhs = vector_field_apply(index, &fg);
    let xf = vector_field_apply(index, f);
    let xg = vector_field_apply(index, g);
    let rhs = star_scaled(&xf, &g.clone().into())?.add(&star_scaled(&f.clone().into(), &xg)?)?;
    lhs.sub(&rhs)
}

/// `(f⋆g)⋆h - f⋆(g⋆h)`; never assumed to vanish.
pub fn associator(f: &TwistedElement, g: &TwistedElement, h: &TwistedElement) -> Result<TwistedElement, AlgebraError> {
    Ok(star(&star(f, g)?, h)? - star(f, &star(g, h)?)?)
}

/// Cyclic sum `[x^μ,[x^ν,x^ρ]] + [x^ρ,[x^μ,x^ν]] + [x^ν,[x^ρ,x^μ]]`.
pub fn jacobi_component(mu: usize, nu: usize, rho: usize) -> Result<RootTwoScaled, AlgebraError> {
    let c = coord_images();
    let x = |i: usize| c.x(i).clone();
    let nested = |i: usize, j: usize, k: usize| -> Result<RootTwoScaled, AlgebraError> {
        commutator_scaled(&x(i), &commutator_scaled(&x(j), &x(k))?)
    };
    nested(mu, nu, rho)?.add(&nested(rho, mu, nu)?)?.add(&nested(nu, rho, mu)?)
}

pub const JACOBI_ANCHOR: &str = "conferring a Lie algebra structure";

/// PASS iff every cyclic sum over `{1,2}³` vanishes.
pub fn jacobi_check() -> ConformanceCase {
    let mut failures = Vec::new();
    let mut total = TwistedElement::zero();
    for mu in 1..=2 {
        for nu in 1..=2 {
            for rho in 1..=2 {
                match jacobi_component(mu, nu, rho) {
                    Ok(r) if r.is_zero() => {}
                    Ok(r) => {
                        failures.push(format!("({mu},{nu},{rho})"));
                        total = total + r.body;
                    }
                    Err(e) => failures.push(format!("({mu},{nu},{rho}): {e}")),
                }
            }
        }
    }
    let case = ConformanceCase::exact("jacobi/all", JACOBI_ANCHOR, total);
    if failures.is_empty() {
        case
    } else {
        ConformanceCase::check("jacobi/all", JACOBI_ANCHOR, false, failures.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_frame() {
        let det = frame_component(1, 1) * frame_component(2, 2) - frame_component(1, 2) * frame_component(2, 1);
        assert_eq!(det, TwistedElement::e_inv());
    }

    #[test]
    fn theta_tilde_components() {
        let theta_e_inv = TwistedElement::e_inv().scale_theta(1);
        assert_eq!(theta_tilde(1, 2), theta_e_inv);
        assert_eq!(theta_tilde(2, 1), -&theta_e_inv);
        assert!(theta_tilde(1, 1).is_zero());
        assert!(theta_tilde(2, 2).is_zero());
    }

    #[test]
    fn first_vector_field_on_first_coordinate() {
        // X₁x¹ = 1 + ω¹₁₂x²
        let c = coord_images();
        let out = vector_field_apply_scaled(1, &c.x1);
        let expected = RootTwoScaled::exact(TwistedElement::one()).add(&c.omega1.mul(&c.x2)).unwrap();
        assert_eq!(out, expected);
        assert!(vector_field_apply(2, &TwistedElement::one()).is_zero());
    }

    #[test]
    fn jacobi_identity_holds() {
        assert!(jacobi_check().passed());
        assert!(jacobi_component(1, 2, 1).unwrap().is_zero());
    }

    #[test]
    fn associator_trivial_cases() {
        let f: TwistedElement = "a^2 abar^1 + 3 θ^1 abar^1 w^1".parse().unwrap();
        let g: TwistedElement = "2 G^1 - θ^-1 a^1 abar^2 wbar^1 G^1".parse().unwrap();
        assert!(associator(&TwistedElement::one(), &f, &g).unwrap().is_zero());
        let r = associator(&TwistedElement::a(), &TwistedElement::abar(), &TwistedElement::one()).unwrap();
        assert!(r.limit_omega_zero().is_zero());
    }
}
