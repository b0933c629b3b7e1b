//! Plane-wave products `e^{ikx}⋆e^{iqx}` summed term by term against the
//! closed phase `e^{i(k+q)x} e^{-(i/2)θe^{-1} kJq}`.

use num_complex::Complex64;

use super::{NumericConfig, NumericPoint};
use crate::error::NumericError;

/// `κ` with `k·x = κa + κ̄ā`, so `∂_a e^{ikx} = iκ e^{ikx}`.
fn holomorphic_parts(k: [f64; 2]) -> (Complex64, Complex64) {
    let s = std::f64::consts::SQRT_2;
    (Complex64::new(k[0], -k[1]) / s, Complex64::new(k[0], k[1]) / s)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Returns `(series, formula)` at `at`. The series uses the first-order
/// expansion `(θe^{-1}/2)^n ≈ (θ/2)^n (1 - n(aω + āω̄))`.
pub fn plane_wave_check(
    k: [f64; 2],
    q: [f64; 2],
    at: &NumericPoint,
    cfg: &NumericConfig,
) -> Result<(Complex64, Complex64), NumericError> {
    cfg.validate()?;
    let i = Complex64::new(0.0, 1.0);
    let (x1, x2) = at.coordinates();
    let plane = (i * ((k[0] + q[0]) * x1 + (k[1] + q[1]) * x2)).exp();
    let (kap, kapb) = holomorphic_parts(k);
    let (lam, lamb) = holomorphic_parts(q);
    let delta = at.a * at.omega + at.abar * at.omegabar;

    let mut series = Complex64::new(0.0, 0.0);
    let mut n_fact = 1.0;
    for n in 0..cfg.series_terms {
        if n > 0 {
            n_fact *= n as f64;
        }
        // Σ_k C(n,k)(-1)^{n-k} (∂_a^k ∂_ā^{n-k} f)(∂_ā^k ∂_a^{n-k} g) / (f g)
        let mut bi = Complex64::new(0.0, 0.0);
        for kk in 0..=n {
            let sign = if (n - kk) % 2 == 0 { 1.0 } else { -1.0 };
            let df = (i * kap).powi(kk as i32) * (i * kapb).powi((n - kk) as i32);
            let dg = (i * lamb).powi(kk as i32) * (i * lam).powi((n - kk) as i32);
            bi += sign * binomial(n, kk) * df * dg;
        }
        let pref = (at.theta / 2.0).powi(n as i32) / n_fact * (Complex64::new(1.0, 0.0) - n as f64 * delta);
        series += pref * bi;
    }
    let kjq = k[0] * q[1] - k[1] * q[0];
    let formula = (-0.5 * i * at.theta * at.e_inv() * kjq).exp();
    Ok((plane * series, plane * formula))
}

/// `(|ω|, |series - formula|)` for `ω, ω/2, ω/4, …` (`halvings + 1` rows).
pub fn plane_wave_scaling(
    k: [f64; 2],
    q: [f64; 2],
    at: &NumericPoint,
    cfg: &NumericConfig,
    halvings: usize,
) -> Result<Vec<(f64, f64)>, NumericError> {
    let mut rows = Vec::with_capacity(halvings + 1);
    let mut omega = at.omega;
    for _ in 0..=halvings {
        let p = at.with_omega(omega);
        let c = NumericConfig { omega_val: omega, omegabar_val: omega.conj(), ..*cfg };
        let (s, f) = plane_wave_check(k, q, &p, &c)?;
        rows.push((omega.norm(), (s - f).norm()));
        omega /= 2.0;
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_unit_vectors() {
        let cfg = NumericConfig::new(0.5, Complex64::new(0.0, 0.0));
        let p = cfg.point(0.0, 0.0);
        let (s, f) = plane_wave_check([1.0, 0.0], [0.0, 1.0], &p, &cfg).unwrap();
        let expected = Complex64::new(0.0, -0.25).exp();
        assert!((f - expected).norm() < 1e-15);
        assert!((s - f).norm() < 1e-12);
    }

    #[test]
    fn parallel_vectors_have_no_phase() {
        let cfg = NumericConfig::new(0.7, Complex64::new(0.0, 0.0));
        let p = cfg.point(0.4, -1.1);
        let (s, f) = plane_wave_check([0.3, 0.8], [0.3, 0.8], &p, &cfg).unwrap();
        let plane = Complex64::new(0.0, 2.0 * (0.3 * 0.4 - 0.8 * 1.1)).exp();
        assert!((f - plane).norm() < 1e-14);
        assert!((s - plane).norm() < 1e-14);
    }

    #[test]
    fn second_order_discrepancy() {
        let cfg = NumericConfig::new(1.0, Complex64::new(0.02, 0.01));
        let p = cfg.point(0.6, 0.3);
        let rows = plane_wave_scaling([0.9, 0.2], [-0.1, 1.0], &p, &cfg, 3).unwrap();
        for w in rows.windows(2) {
            let ratio = w[0].1 / w[1].1;
            assert!((ratio - 4.0).abs() < 0.2, "{rows:?}");
        }
    }
}
