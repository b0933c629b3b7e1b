//! Gauss–Hermite quadrature of the integral form of the product,
//!
//! `(f⋆g)(x) = (e/(πθ))² ∫d²y d²z f(y) g(z) exp(σ(2ie/θ)(x-y)J(x-z))`,
//!
//! with `e` frozen at the outer point `x` and `σ = +1` (the orientation
//! that reproduces the series product; see the crate tests).

use num_complex::Complex64;
use rayon::prelude::*;

use super::{eval_shifted, NumericConfig, NumericPoint};
use crate::algebra::TwistedElement;
use crate::error::NumericError;

const KERNEL_SIGN: f64 = 1.0;

/// Nodes and weights for `∫ e^{-u²} h(u) du`, computed by Newton iteration
/// on the normalized Hermite recurrence.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "at least one node");
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let pim4 = std::f64::consts::PI.powf(-0.25);
    let nf = n as f64;
    let m = n.div_ceil(2);
    let mut z = 0.0;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let dz = p1 / pp;
            z -= dz;
            if dz.abs() <= 3e-14 * z.abs().max(1.0) {
                break;
            }
        }
        if n % 2 == 1 && i == m - 1 {
            // the middle root of an odd rule is exactly zero
            z = 0.0;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

fn pairwise_sum(v: &[Complex64]) -> Complex64 {
    match v.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => v[0],
        n => {
            let (l, r) = v.split_at(n / 2);
            pairwise_sum(l) + pairwise_sum(r)
        }
    }
}

/// A factor sampled on its scaled 2D grid: `values[i][j] = w_i w_j f̂(y_ij)`,
/// where `f̂` has the leading Gaussian divided out.
struct Sampled {
    coords: Vec<f64>,
    values: Vec<Vec<Complex64>>,
    jacobian: f64,
}

fn sample(f: &TwistedElement, at: &NumericPoint, nodes: &[f64], weights: &[f64]) -> Result<Sampled, NumericError> {
    let weights_present = f.gaussian_weights();
    let g_min = match weights_present.first() {
        Some(&g) if g >= 1 => g,
        _ => return Err(NumericError::NonIntegrable),
    };
    let scale = (at.theta / g_min as f64).sqrt();
    let coords: Vec<f64> = nodes.iter().map(|u| scale * u).collect();
    let values = coords
        .iter()
        .zip(weights)
        .map(|(&y1, &w1)| {
            coords
                .iter()
                .zip(weights)
                .map(|(&y2, &w2)| {
                    let p = at.moved_to(y1, y2);
                    eval_shifted(f, &p, g_min).map(|v| v * w1 * w2).map_err(|_| NumericError::PoleOnGrid)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Sampled { coords, values, jacobian: scale * scale })
}

/// Numeric `(f⋆g)(x)` at the real point `at`; θ and ω are taken from the
/// point, node count from `cfg`.
pub fn star_quadrature(
    f: &TwistedElement,
    g: &TwistedElement,
    at: &NumericPoint,
    cfg: &NumericConfig,
) -> Result<Complex64, NumericError> {
    cfg.validate()?;
    if at.independent {
        return Err(NumericError::BadConfig("quadrature needs a real point".into()));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let (nodes, weights) = gauss_hermite(cfg.quadrature_nodes);
    let fs = sample(f, at, &nodes, &weights)?;
    let gs = sample(g, at, &nodes, &weights)?;
    let (x1, x2) = at.coordinates();
    let e = at.e_inv().inv();
    let c = KERNEL_SIGN * 2.0 / at.theta;
    let i = Complex64::new(0.0, 1.0);
    let n = nodes.len();

    // exp(iσ c e [(x-y)¹(x-z)² - (x-y)²(x-z)¹]) splits into a z¹ factor and a z² factor
    let rows: Vec<Complex64> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (iy1, iy2) = (idx / n, idx % n);
            let fy = fs.values[iy1][iy2];
            if fy == Complex64::new(0.0, 0.0) {
                return fy;
            }
            let u1 = x1 - fs.coords[iy1];
            let u2 = x2 - fs.coords[iy2];
            let k = i * c * e;
            let along1: Vec<Complex64> = gs.coords.iter().map(|z1| (-k * u2 * (x1 - z1)).exp()).collect();
            let along2: Vec<Complex64> = gs.coords.iter().map(|z2| (k * u1 * (x2 - z2)).exp()).collect();
            let mut outer = Complex64::new(0.0, 0.0);
            for (j1, a1) in along1.iter().enumerate() {
                let row = &gs.values[j1];
                let mut inner = Complex64::new(0.0, 0.0);
                for (gv, a2) in row.iter().zip(&along2) {
                    inner += gv * a2;
                }
                outer += a1 * inner;
            }
            fy * outer
        })
        .collect();
    let pref = (e / (std::f64::consts::PI * at.theta)).powi(2) * fs.jacobian * gs.jacobian;
    Ok(pref * pairwise_sum(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_moments() {
        for n in [8, 20, 48, 96] {
            let (x, w) = gauss_hermite(n);
            let sqrt_pi = std::f64::consts::PI.sqrt();
            let m0: f64 = w.iter().sum();
            let m2: f64 = x.iter().zip(&w).map(|(x, w)| w * x * x).sum();
            let m4: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(4)).sum();
            assert!((m0 - sqrt_pi).abs() < 1e-12, "n={n} m0={m0}");
            assert!((m2 - sqrt_pi / 2.0).abs() < 1e-12);
            assert!((m4 - 3.0 * sqrt_pi / 4.0).abs() < 1e-12);
            assert!(x.windows(2).all(|p| p[0] > p[1]));
        }
    }

    #[test]
    fn rejects_non_gaussian_factor() {
        let cfg = NumericConfig::default().with_nodes(8);
        let p = cfg.point(0.1, 0.2);
        let r = star_quadrature(&TwistedElement::a(), &TwistedElement::gaussian(1), &p, &cfg);
        assert_eq!(r, Err(NumericError::NonIntegrable));
        let zero = star_quadrature(&TwistedElement::gaussian(1), &TwistedElement::zero(), &p, &cfg).unwrap();
        assert_eq!(zero, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn pole_on_odd_grid() {
        let cfg = NumericConfig::default().with_nodes(9);
        let p = cfg.point(0.1, 0.2);
        let f: TwistedElement = "1 a^-1 G^1".parse().unwrap();
        assert_eq!(star_quadrature(&f, &TwistedElement::gaussian(1), &p, &cfg), Err(NumericError::PoleOnGrid));
    }
}
