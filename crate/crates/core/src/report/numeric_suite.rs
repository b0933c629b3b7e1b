//! Floating-point cross-checks: evaluation, quadrature of the integral
//! product, and the plane-wave phase.

use num_complex::Complex64;

use crate::algebra::TwistedElement;
use crate::conformance::ConformanceCase;
use crate::numeric::{eval, plane_wave_check, plane_wave_scaling, star_quadrature, NumericConfig, NumericPoint};
use crate::sample::{self, SampleShape};
use crate::scalar::Scalar;
use crate::star::{raise_left, raise_right};
use crate::states::{fundamental, StateSide};

use super::anchors::*;
use super::cases::{one, Job};
use super::RunConfig;

/// Sample points for the quadrature of `f₀₀⋆f₀₀`.
pub const QUADRATURE_POINTS: [(f64, f64); 5] = [(0.3, -0.2), (0.0, 0.0), (1.0, 0.5), (-0.7, 0.9), (1.5, -1.2)];

/// Absolute tolerance at the configured node count.
pub const QUADRATURE_TOL: f64 = 1e-4;

/// Below this both errors are rounding noise and no further gain is possible.
pub const FLOATING_FLOOR: f64 = 1e-12;

/// Label, monomial powers of both factors, expected raising counts.
type Probe = (&'static str, (i32, i32), (i32, i32), Option<(u32, u32)>);
/// Wave vectors k and q, θ, and the evaluation point.
type Wave = ([f64; 2], [f64; 2], f64, (f64, f64));

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn f00_flat() -> TwistedElement {
    TwistedElement::gaussian(1).scale(&Scalar::int(2))
}

/// `(f⋆f)(x)` for `f = f₀₀` at ω = 0 and its error against `f(x)`.
pub fn ground_idempotence_error(x: (f64, f64), theta: f64, nodes: usize) -> Result<(Complex64, Complex64), String> {
    let cfg = NumericConfig::new(theta, zero()).with_nodes(nodes);
    let p = cfg.point(x.0, x.1);
    let f = f00_flat();
    let q = star_quadrature(&f, &f, &p, &cfg).map_err(|e| e.to_string())?;
    let e = eval(&f, &p).map_err(|e| e.to_string())?;
    Ok((e, q))
}

fn numeric_case(
    id: String,
    anchor: &str,
    r: Result<(Complex64, Complex64), String>,
    tol: f64,
    nodes: Option<usize>,
) -> ConformanceCase {
    match r {
        Ok((expected, actual)) => ConformanceCase::numeric(id, anchor, expected, actual, tol, nodes),
        Err(e) => ConformanceCase::error(id, anchor, e),
    }
}

/// `2^{-m-n} (ā⋆)^m (⋆a)^n f₀₀` at ω = 0, the product `(ā^m f₀₀)⋆(a^n f₀₀)`.
fn symbolic_pair(m: u32, n: u32) -> TwistedElement {
    let mut f = f00_flat();
    for _ in 0..n {
        f = raise_right(&f).limit_omega_zero();
    }
    for _ in 0..m {
        f = raise_left(&f).limit_omega_zero();
    }
    f.scale(&Scalar::ratio(1, 1i64 << (m + n)))
}

fn monomial_times_f00(p: i32, q: i32) -> TwistedElement {
    TwistedElement::monomial(Scalar::one(), 0, p, q) * f00_flat()
}

pub(super) fn numeric(cfg: &RunConfig) -> Vec<Job> {
    let ncfg = cfg.numeric;
    let theta = ncfg.theta_val;
    let nodes = ncfg.quadrature_nodes;
    let mut jobs: Vec<Job> = vec![
        one(move || {
            let at = NumericPoint::real(0.3, -0.2, 1.0, zero());
            let r = eval(&fundamental(StateSide::Right).body, &at)
                .map(|v| (Complex64::new(2.0 * (-0.13f64).exp(), 0.0), v));
            numeric_case("numeric/eval/f00R".into(), FUNDAMENTAL, r.map_err(|e| e.to_string()), 1e-12, None)
        }),
        one(move || {
            let at = ncfg.point(0.4, 1.3);
            let r = eval(&TwistedElement::one(), &at).map(|v| (Complex64::new(1.0, 0.0), v));
            numeric_case("numeric/eval/one".into(), PLUMBING, r.map_err(|e| e.to_string()), 1e-15, None)
        }),
        one(move || {
            let at = NumericPoint::real(-0.8, 0.25, theta, zero());
            let r = eval(&TwistedElement::e_inv().scale_theta(1), &at).map(|v| (Complex64::new(theta, 0.0), v));
            numeric_case(
                "numeric/eval/theta-e-inverse".into(),
                COMMUTATION,
                r.map_err(|e| e.to_string()),
                1e-14 * theta.max(1.0),
                None,
            )
        }),
    ];
    let seed = cfg.seed;
    let samples = cfg.samples;
    for (label, op) in [("add", 0u8), ("mul", 1u8)] {
        jobs.push(one(move || {
            // worst relative discrepancy over the draws, recorded with its values
            let mut rng = sample::rng_for(seed, &format!("numeric/homomorphism/{label}"));
            let at = NumericPoint::real(0.7, -0.45, theta, zero());
            let mut worst: Option<(f64, Complex64, Complex64)> = None;
            for _ in 0..samples {
                let f = sample::element(&mut rng, SampleShape::GENERAL);
                let g = sample::element(&mut rng, SampleShape::GENERAL);
                let (combined, expected) = match op {
                    0 => (eval(&(&f + &g), &at), eval(&f, &at).and_then(|x| eval(&g, &at).map(|y| x + y))),
                    _ => (eval(&(&f * &g), &at), eval(&f, &at).and_then(|x| eval(&g, &at).map(|y| x * y))),
                };
                let (Ok(actual), Ok(expected)) = (combined, expected) else {
                    return ConformanceCase::error(
                        format!("numeric/homomorphism/{label}"),
                        PLUMBING,
                        "pole at sample point",
                    );
                };
                let rel = (actual - expected).norm() / expected.norm().max(1.0);
                if worst.is_none_or(|w| rel > w.0) {
                    worst = Some((rel, expected, actual));
                }
            }
            let (_, expected, actual) = worst.expect("at least one sample");
            ConformanceCase::numeric(
                format!("numeric/homomorphism/{label}"),
                PLUMBING,
                expected,
                actual,
                1e-12 * expected.norm().max(1.0),
                None,
            )
            .with_note(format!("worst of {samples} seeded draws at ω = 0"))
        }));
    }
    for (i, &x) in QUADRATURE_POINTS.iter().enumerate() {
        jobs.push(Box::new(move || {
            let base = ground_idempotence_error(x, theta, nodes);
            let doubled = ground_idempotence_error(x, theta, 2 * nodes);
            let id = format!("numeric/quadrature/f00-idempotent/{i}");
            let mut out = vec![numeric_case(id.clone(), QUADRATURE, base.clone(), QUADRATURE_TOL, Some(nodes))
                .with_note(format!("x = ({}, {}), ω = 0", x.0, x.1))];
            let conv_id = format!("numeric/quadrature/convergence/{i}");
            out.push(match (base, doubled) {
                (Ok((e1, q1)), Ok((e2, q2))) => {
                    let (err1, err2) = ((q1 - e1).norm(), (q2 - e2).norm());
                    let ok = err2 <= err1 / 10.0 || err1.max(err2) < FLOATING_FLOOR;
                    ConformanceCase::check(
                        conv_id,
                        QUADRATURE,
                        ok,
                        format!("error {err1:.3e} at {nodes} nodes, {err2:.3e} at {} nodes", 2 * nodes),
                    )
                }
                (Err(e), _) | (_, Err(e)) => ConformanceCase::error(conv_id, QUADRATURE, e),
            });
            out
        }));
    }
    jobs.push(one(move || {
        let c = NumericConfig::new(theta, zero()).with_nodes(nodes);
        let r = star_quadrature(&f00_flat(), &TwistedElement::zero(), &c.point(0.2, 0.1), &c).map(|v| (zero(), v));
        numeric_case(
            "numeric/quadrature/zero-factor".into(),
            PLUMBING,
            r.map_err(|e| e.to_string()),
            1e-300,
            Some(nodes),
        )
    }));
    // products of monomial multiples of f₀₀ against the exact Moyal product
    let probes: [Probe; 6] = [
        ("abar-f00,f00", (0, 1), (0, 0), Some((1, 0))),
        ("f00,a-f00", (0, 0), (1, 0), Some((0, 1))),
        ("abar-f00,a-f00", (0, 1), (1, 0), Some((1, 1))),
        ("abar2-f00,a-f00", (0, 2), (1, 0), Some((2, 1))),
        ("f00,abar-f00", (0, 0), (0, 1), None),
        ("a-f00,f00", (1, 0), (0, 0), None),
    ];
    for (name, (p1, q1), (p2, q2), symbolic) in probes {
        jobs.push(one(move || {
            let c = NumericConfig::new(theta, zero()).with_nodes(nodes);
            let at = c.point(0.45, -0.3);
            let f = monomial_times_f00(p1, q1);
            let g = monomial_times_f00(p2, q2);
            let expected = match symbolic {
                Some((m, n)) => eval(&symbolic_pair(m, n), &at).map_err(|e| e.to_string()),
                None => Ok(zero()),
            };
            let actual = star_quadrature(&f, &g, &at, &c).map_err(|e| e.to_string());
            let r = expected.and_then(|e| actual.map(|a| (e, a)));
            numeric_case(format!("numeric/quadrature/kernel-orientation/{name}"), QUADRATURE, r, 1e-8, Some(nodes))
        }));
    }
    if ncfg.omega_val.norm() > 0.0 {
        jobs.push(one(move || {
            let at = ncfg.point(0.3, -0.2);
            let f = fundamental(StateSide::Right).body;
            let r = star_quadrature(&f, &f, &at, &ncfg)
                .and_then(|q| eval(&f, &at).map(|e| (e, q)))
                .map_err(|e| e.to_string());
            numeric_case(
                "numeric/quadrature/f00R-idempotent-twisted".into(),
                QUADRATURE,
                r,
                QUADRATURE_TOL,
                Some(nodes),
            )
            .informational()
            .with_note("first-order only: e is frozen at the outer point")
        }));
    }
    let waves: [Wave; 5] = [
        ([1.0, 0.0], [0.0, 1.0], 0.5, (0.0, 0.0)),
        ([0.6, -0.3], [0.2, 0.9], 1.0, (0.4, -0.7)),
        ([0.8, 0.5], [-0.7, 0.3], 1.0, (1.2, 0.3)),
        ([0.3, 0.8], [0.3, 0.8], 1.0, (-0.5, 0.6)),
        ([1.5, 0.0], [0.0, -0.6], 1.1, (0.2, 0.2)),
    ];
    for (i, (k, q, th, x)) in waves.into_iter().enumerate() {
        jobs.push(one(move || {
            let c = NumericConfig::new(th, zero());
            let r = plane_wave_check(k, q, &c.point(x.0, x.1), &c).map_err(|e| e.to_string());
            numeric_case(format!("numeric/plane-wave/omega-zero/{i}"), PLANE_WAVE, r.map(|(s, f)| (f, s)), 1e-8, None)
                .with_note(format!("k = {k:?}, q = {q:?}, θ = {th}"))
        }));
    }
    jobs.push(one(move || {
        let omega = if ncfg.omega_val.norm() > 0.0 { ncfg.omega_val } else { Complex64::new(0.02, 0.01) };
        let c = NumericConfig::new(1.0, omega);
        let id = "numeric/plane-wave/second-order-in-omega";
        match plane_wave_scaling([0.9, 0.2], [-0.1, 1.0], &c.point(0.6, 0.3), &c, 3) {
            Ok(rows) => {
                let ratios: Vec<f64> = rows.windows(2).map(|w| w[0].1 / w[1].1).collect();
                let ok = ratios.iter().all(|r| (r - 4.0).abs() < 0.5);
                ConformanceCase::check(id, PLANE_WAVE, ok, format!("halving ratios {ratios:.3?} (4 for O(|ω|²))"))
            }
            Err(e) => ConformanceCase::error(id, PLANE_WAVE, e),
        }
    }));
    jobs
}
