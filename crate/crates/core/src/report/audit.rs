//! Suites that compare engine-built states and energies with the printed
//! closed forms, plus the matrix-basis rewrite rules.

use num_rational::BigRational;

use crate::algebra::{Monomial, TwistedElement};
use crate::conformance::ConformanceCase;
use crate::error::StateError;
use crate::sample::{self, SampleShape};
use crate::scalar::Scalar;
use crate::star::{hamiltonian, hamiltonian_left, hamiltonian_right, HamiltonianMethod};
use crate::states::{
    appendix_a_line, appendix_b_case, closed_form, engine_energy, engine_u, extract_eigenvalue, fundamental, ladder,
    lower_n, matrix_basis_action, paper_energy, spectrum_entry, u_sequence, AppendixALine, AppendixBFamily, EnergyKind,
    MatrixBasisElement, MatrixBasisOp, StateSide,
};

use super::anchors::*;
use super::cases::{exact, one, property, Job};
use super::RunConfig;

const DEGENERACY_MAX: u32 = 6;
const APPENDIX_A_MAX: u32 = 6;
const LAMBDA_MAX: u32 = 6;

fn side_tag(side: StateSide) -> &'static str {
    match side {
        StateSide::Right => "R",
        StateSide::Left => "L",
    }
}

/// `θ(m + ½)`
fn moyal_level(m: u32) -> TwistedElement {
    TwistedElement::term(Scalar::ratio(2 * m as i64 + 1, 2), 1, Monomial::ONE)
}

/// Turns an extraction failure into a FAIL carrying the residual.
fn energy_case(
    id: String,
    anchor: &str,
    engine: Result<TwistedElement, StateError>,
    paper: &TwistedElement,
) -> ConformanceCase {
    match engine {
        Ok(e) => ConformanceCase::exact(id, anchor, e - paper.clone()),
        Err(StateError::NotProportional { residual }) => {
            ConformanceCase::error(id, anchor, "state is not an eigenfunction").with_residual(*residual)
        }
        Err(e) => ConformanceCase::error(id, anchor, e),
    }
}

fn lowered_state(side: StateSide, m: u32, k: u32) -> Result<TwistedElement, StateError> {
    Ok(lower_n(side, &ladder(side, m)?.body, k))
}

pub(super) fn states(cfg: &RunConfig) -> Vec<Job> {
    let max = cfg.max_level;
    let mut jobs: Vec<Job> = Vec::new();
    for side in StateSide::BOTH {
        let t = side_tag(side);
        jobs.push(one(move || {
            let f = fundamental(side).body;
            ConformanceCase::exact(format!("states/fundamental-annihilated/{t}"), FUNDAMENTAL, lower_n(side, &f, 1))
        }));
        for m in 0..=max {
            jobs.push(one(move || {
                // ω⁰ part: 2^m x^m · 2G with x = ā (right) or a (left)
                let r = ladder(side, m).map(|s| {
                    let lead = TwistedElement::term(
                        Scalar::from_rational(BigRational::from_integer((num_bigint::BigInt::from(1) << m) * 2)),
                        0,
                        Monomial::new(0, m as i32).with_gaussian(1),
                    );
                    let lead = if side == StateSide::Right { lead } else { lead.mirrored() };
                    s.body.limit_omega_zero() - lead
                });
                exact(format!("states/moyal-limit/{t}/{m}"), MOYAL_LIMIT, r)
            }));
            jobs.push(one(move || {
                let r = ladder(side, m).map(|s| s.body - closed_form(side, m));
                exact(format!("states/closed-form/{t}/{m}"), EIGENPROBLEM, r)
            }));
            jobs.push(one(move || {
                let r = ladder(side, m)
                    .map(|s| TwistedElement::constant(engine_u(&s) - Scalar::from_rational(u_sequence(m))));
                exact(format!("states/u-sequence/{t}/{m}"), EIGENPROBLEM, r)
                    .with_note(format!("printed U_{m} = {}", u_sequence(m)))
            }));
        }
        for m in 0..=DEGENERACY_MAX {
            jobs.push(one(move || {
                exact(format!("states/degeneracy-vanishing/{t}/{m}"), APPENDIX_A, lowered_state(side, m, m + 2))
            }));
            jobs.push(one(move || {
                let id = format!("states/degeneracy-proportional/{t}/{m}");
                let lowered = match lowered_state(side, m, m + 1) {
                    Ok(l) => l,
                    Err(e) => return ConformanceCase::error(id, APPENDIX_A, e),
                };
                match extract_eigenvalue(&lowered, &fundamental(side).body) {
                    Ok(c) if c.is_coordinate_free() => {
                        ConformanceCase::check(id, APPENDIX_A, true, format!("factor {c}"))
                    }
                    Ok(c) => ConformanceCase::check(id, APPENDIX_A, false, "factor depends on a or ā").with_residual(c),
                    Err(StateError::NotProportional { residual }) => {
                        ConformanceCase::error(id, APPENDIX_A, "not proportional to f00").with_residual(*residual)
                    }
                    Err(e) => ConformanceCase::error(id, APPENDIX_A, e),
                }
            }));
        }
    }
    for m in 0..=max {
        jobs.push(one(move || {
            let r = ladder(StateSide::Right, m)
                .and_then(|r| ladder(StateSide::Left, m).map(|l| l.body - r.body.mirrored()));
            exact(format!("states/left-mirrors-right/{m}"), STATES, r)
        }));
    }
    jobs
}

pub(super) fn spectra(cfg: &RunConfig) -> Vec<Job> {
    let (max, seed, n) = (cfg.max_level, cfg.seed, cfg.samples);
    let mut jobs: Vec<Job> = Vec::new();
    for side in StateSide::BOTH {
        let t = side_tag(side);
        for method in HamiltonianMethod::ALL {
            let meth = method.as_str();
            for m in 0..=max {
                jobs.push(Box::new(move || {
                    let state = match ladder(side, m) {
                        Ok(s) => s,
                        Err(e) => {
                            return vec![ConformanceCase::error(
                                format!("spectra/energy/{t}/{meth}/{m}"),
                                EIGENPROBLEM,
                                e,
                            )]
                        }
                    };
                    let entry_id = format!("spectra/energy/{t}/{meth}/{m}");
                    let limit_id = format!("spectra/moyal-limit/{t}/{meth}/{m}");
                    match spectrum_entry(&state, method) {
                        Ok(entry) => vec![
                            ConformanceCase::exact(entry_id, EIGENPROBLEM, entry.residual),
                            ConformanceCase::exact(limit_id, MOYAL_LIMIT, entry.limit - moyal_level(m)),
                        ],
                        Err(e) => {
                            let paper = TwistedElement::zero();
                            vec![
                                energy_case(entry_id, EIGENPROBLEM, Err(e.clone()), &paper),
                                ConformanceCase::error(limit_id, MOYAL_LIMIT, e),
                            ]
                        }
                    }
                }));
            }
            for m in 1..=LAMBDA_MAX {
                jobs.push(one(move || {
                    let kind = match side {
                        StateSide::Right => EnergyKind::Lambda11R { m },
                        StateSide::Left => EnergyKind::Lambda11L { n: m },
                    };
                    let paper = paper_energy(kind).expect("index in range");
                    let engine = lowered_state(side, m, m).and_then(|f| engine_energy(side, &f, method));
                    energy_case(format!("spectra/lambda-one/{t}/{meth}/{m}"), LAMBDA_ONE, engine, &paper)
                }));
                for k in 1..=m {
                    jobs.push(one(move || {
                        let kind = match side {
                            StateSide::Right => EnergyKind::LambdaMkR { m, k },
                            StateSide::Left => EnergyKind::LambdaNlL { n: m, l: k },
                        };
                        let paper = paper_energy(kind).expect("index in range");
                        let engine = lowered_state(side, m, k).and_then(|f| engine_energy(side, &f, method));
                        energy_case(format!("spectra/lambda/{t}/{meth}/{m}/{k}"), LAMBDA_STATES, engine, &paper)
                    }));
                }
            }
        }
        for m in 1..=LAMBDA_MAX {
            jobs.push(one(move || {
                let (general, special) = match side {
                    StateSide::Right => (EnergyKind::LambdaMkR { m, k: m }, EnergyKind::Lambda11R { m }),
                    StateSide::Left => (EnergyKind::LambdaNlL { n: m, l: m }, EnergyKind::Lambda11L { n: m }),
                };
                let r = paper_energy(general).and_then(|g| paper_energy(special).map(|s| g - s));
                exact(format!("spectra/specialization/{t}/{m}"), LAMBDA_STATES, r)
            }));
            jobs.push(one(move || {
                // printed Λ energies reduce to θ(m-k+½) as ω → 0
                let mut residual = TwistedElement::zero();
                for k in 1..=m {
                    let kind = match side {
                        StateSide::Right => EnergyKind::LambdaMkR { m, k },
                        StateSide::Left => EnergyKind::LambdaNlL { n: m, l: k },
                    };
                    let e = paper_energy(kind).expect("index in range");
                    residual = residual + (e.limit_omega_zero() - moyal_level(m - k));
                }
                ConformanceCase::exact(format!("spectra/lambda-printed-limit/{t}/{m}"), MOYAL_LIMIT, residual)
            }));
        }
    }
    let pairs = [
        (HamiltonianMethod::Series, HamiltonianMethod::Bracket),
        (HamiltonianMethod::Series, HamiltonianMethod::MuOperator),
        (HamiltonianMethod::Bracket, HamiltonianMethod::MuOperator),
    ];
    for side in StateSide::BOTH {
        for (x, y) in pairs {
            jobs.push(one(move || {
                let f = fundamental(side).body;
                let diff = hamiltonian(&f, side.action_side(), x) - hamiltonian(&f, side.action_side(), y);
                ConformanceCase::info(
                    format!("spectra/method-gap/{}/{}-vs-{}", side_tag(side), x.as_str(), y.as_str()),
                    HAMILTONIAN,
                    diff,
                )
                .with_note("difference of the two Hamiltonian actions on f00; no claim is printed about it")
            }));
        }
    }
    jobs.push(one(|| {
        let f = fundamental(StateSide::Right).body;
        let r = hamiltonian_left(&f, HamiltonianMethod::MuOperator).mirrored()
            - hamiltonian_right(&f.mirrored(), HamiltonianMethod::MuOperator);
        ConformanceCase::exact("spectra/mu-operator-mirror/f00", HAMILTONIAN, r)
    }));
    jobs.push(one(move || {
        property("spectra/mu-operator-mirror/random", HAMILTONIAN, seed, n, |rng| {
            let f = sample::element(rng, SampleShape::GENERAL);
            let r = hamiltonian_left(&f, HamiltonianMethod::MuOperator).mirrored()
                - hamiltonian_right(&f.mirrored(), HamiltonianMethod::MuOperator);
            Ok((r, format!("f = {f}")))
        })
    }));
    jobs
}

fn appendix_a_lines(m: u32) -> Vec<AppendixALine> {
    let mut lines = Vec::new();
    if m >= 1 {
        lines.push(AppendixALine::First);
    }
    if m >= 2 {
        lines.push(AppendixALine::Second);
    }
    lines.extend((1..=m).map(AppendixALine::General));
    if m >= 1 {
        lines.push(AppendixALine::Top);
    }
    lines.push(AppendixALine::Proportional);
    lines.push(AppendixALine::Vanishing);
    lines
}

pub(super) fn appendix_a() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for side in StateSide::BOTH {
        for m in 0..=APPENDIX_A_MAX {
            for line in appendix_a_lines(m) {
                jobs.push(one(move || {
                    let id = format!("appendix_a/{}/m={m}/{}", side_tag(side), line.label());
                    let r = lowered_state(side, m, line.power(m))
                        .and_then(|engine| appendix_a_line(side, m, line).map(|printed| engine - printed));
                    exact(id, APPENDIX_A, r)
                }));
            }
        }
    }
    jobs
}

pub(super) fn appendix_b() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for family in AppendixBFamily::ALL {
        for k in 1..=6 {
            jobs.push(one(move || {
                let (engine, printed) = appendix_b_case(family, k);
                ConformanceCase::exact(format!("appendix_b/{}/k={k}", family.as_str()), APPENDIX_B, engine - printed)
            }));
        }
    }
    jobs
}

fn apply_all(ops: &[MatrixBasisOp], b: MatrixBasisElement) -> Result<MatrixBasisElement, StateError> {
    ops.iter().try_fold(b, |acc, &op| matrix_basis_action(op, &acc).map(|(next, _)| next))
}

fn raised(m: u32, n: u32) -> Result<MatrixBasisElement, StateError> {
    let mut ops = vec![MatrixBasisOp::RaiseLeft; m as usize];
    ops.extend(std::iter::repeat_n(MatrixBasisOp::RaiseRight, n as usize));
    apply_all(&ops, MatrixBasisElement::new(0, 0))
}

pub(super) fn matrix_basis(cfg: &RunConfig) -> Vec<Job> {
    let max = cfg.max_level;
    let mut jobs: Vec<Job> = vec![
        one(|| {
            let ok = matches!(raised(1, 0), Ok(b) if (b.m, b.n) == (1, 0) && b.prefactor == TwistedElement::one())
                && matches!(raised(0, 1), Ok(b) if (b.m, b.n) == (0, 1) && b.prefactor == TwistedElement::one());
            ConformanceCase::check("matrix_basis/creation", MATRIX_ACTIONS, ok, "b00 -> b10 and b01 with unit factor")
        }),
        one(|| {
            let b00 = MatrixBasisElement::new(0, 0);
            let ok = [MatrixBasisOp::LowerLeft, MatrixBasisOp::LowerRight]
                .iter()
                .all(|&op| matches!(matrix_basis_action(op, &b00), Ok((b, _)) if b.is_zero()));
            ConformanceCase::check("matrix_basis/annihilation-of-b00", MATRIX_ACTIONS, ok, "a⋆b00 = b00⋆ā = 0")
        }),
        one(|| {
            let lhs = raised(2, 0).and_then(|b| apply_all(&[MatrixBasisOp::RaiseRight], b));
            let rhs = raised(0, 1).and_then(|b| apply_all(&[MatrixBasisOp::RaiseLeft, MatrixBasisOp::RaiseLeft], b));
            let ok = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r && (l.m, l.n) == (2, 1));
            ConformanceCase::check(
                "matrix_basis/left-right-commute",
                MATRIX_ACTIONS,
                ok,
                "creation from both sides commutes",
            )
        }),
        one(|| {
            let mut b = MatrixBasisElement::new(1, 0);
            b.prefactor = TwistedElement::a();
            let ok = matches!(matrix_basis_action(MatrixBasisOp::RaiseLeft, &b), Err(StateError::NonScalarPrefactor));
            ConformanceCase::check("matrix_basis/non-scalar-prefactor", PLUMBING, ok, "a·b10 is rejected")
        }),
        one(|| {
            let past = raised(1, 0).and_then(|b| apply_all(&[MatrixBasisOp::LowerLeft, MatrixBasisOp::LowerLeft], b));
            let after = raised(2, 0).and_then(|b| apply_all(&[MatrixBasisOp::LowerLeft, MatrixBasisOp::RaiseLeft], b));
            let ok = matches!(past, Err(StateError::NoRewrite(_))) && matches!(after, Err(StateError::NoRewrite(_)));
            ConformanceCase::check(
                "matrix_basis/no-rule",
                PLUMBING,
                ok,
                "lowering past the top and raising a Λ symbol have no rule",
            )
        }),
    ];
    for m in 0..=max {
        jobs.push(one(move || {
            // H⋆b_{mn} carries 𝓔ᴿ_{m0} for every n, b_{mn}⋆H carries 𝓔ᴸ_{0m}
            let mut residual = TwistedElement::zero();
            let er = paper_energy(EnergyKind::RightM { m }).expect("in range");
            let el = paper_energy(EnergyKind::LeftN { n: m }).expect("in range");
            for n in 0..=3 {
                let hl = raised(m, n).and_then(|b| matrix_basis_action(MatrixBasisOp::HLeft, &b));
                let hr = raised(n, m).and_then(|b| matrix_basis_action(MatrixBasisOp::HRight, &b));
                match (hl, hr) {
                    (Ok((bl, fl)), Ok((br, fr))) => {
                        residual = residual + (fl - er.clone()) + (fr - el.clone());
                        if bl.norm_tag().m != m || br.norm_tag().n != m {
                            return ConformanceCase::check(
                                format!("matrix_basis/energy/{m}"),
                                MATRIX_EIGEN,
                                false,
                                "norm tag drifted",
                            );
                        }
                        residual = residual + (bl.prefactor - er.clone()) + (br.prefactor - el.clone());
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        return ConformanceCase::error(format!("matrix_basis/energy/{m}"), MATRIX_EIGEN, e)
                    }
                }
            }
            ConformanceCase::exact(format!("matrix_basis/energy/{m}"), MATRIX_EIGEN, residual).with_note("n = 0..3")
        }));
        jobs.push(one(move || {
            // at ω = 0 the rule's eigenvalue agrees with the engine's series Hamiltonian on f̃ᴿ_m
            let id = format!("matrix_basis/engine-link-omega-zero/{m}");
            let rule = raised(m, 0).and_then(|b| matrix_basis_action(MatrixBasisOp::HLeft, &b)).map(|(_, f)| f);
            let engine = ladder(StateSide::Right, m).and_then(|s| {
                let f0 = s.body.limit_omega_zero();
                extract_eigenvalue(&hamiltonian_left(&f0, HamiltonianMethod::Series).limit_omega_zero(), &f0)
            });
            exact(id, MOYAL_LIMIT, rule.and_then(|r| engine.map(|e| r.limit_omega_zero() - e)))
        }));
    }
    for m in 1..=LAMBDA_MAX.min(max.max(1)) {
        jobs.push(one(move || {
            let id = format!("matrix_basis/lambda/{m}");
            let mut residual = TwistedElement::zero();
            for k in 1..=m {
                let ops = vec![MatrixBasisOp::LowerLeft; k as usize];
                let r = raised(m, 0)
                    .and_then(|b| apply_all(&ops, b))
                    .and_then(|b| matrix_basis_action(MatrixBasisOp::HLeft, &b))
                    .and_then(|(_, f)| paper_energy(EnergyKind::LambdaMkR { m, k }).map(|p| f - p));
                match r {
                    Ok(x) => residual = residual + x,
                    Err(e) => return ConformanceCase::error(id, MATRIX_EIGEN, e),
                }
            }
            ConformanceCase::exact(id, MATRIX_EIGEN, residual)
        }));
    }
    jobs
}
