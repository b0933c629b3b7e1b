use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use std::hint::black_box;

use tmoyal::numeric::{eval, star_quadrature, NumericConfig};
use tmoyal::star::{hamiltonian_right, HamiltonianMethod};
use tmoyal::states::{ladder, StateSide};
use tmoyal::{Scalar, TwistedElement};

fn ladder_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("ladder");
    for m in [2u32, 4, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| ladder(StateSide::Right, black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn hamiltonian(c: &mut Criterion) {
    let state = ladder(StateSide::Right, 6).unwrap().body;
    let mut group = c.benchmark_group("hamiltonian_level6");
    for method in HamiltonianMethod::ALL {
        group.bench_function(method.as_str(), |b| b.iter(|| hamiltonian_right(black_box(&state), method)));
    }
    group.finish();
}

fn quadrature(c: &mut Criterion) {
    let f = TwistedElement::gaussian(1).scale(&Scalar::int(2));
    let mut group = c.benchmark_group("quadrature");
    group.sample_size(10);
    for nodes in [24usize, 48] {
        let cfg = NumericConfig::new(1.0, Complex64::new(0.0, 0.0)).with_nodes(nodes);
        let p = cfg.point(0.3, -0.2);
        group.bench_with_input(BenchmarkId::from_parameter(nodes), &nodes, |b, _| {
            b.iter(|| star_quadrature(&f, &f, &p, &cfg).unwrap() - eval(&f, &p).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, ladder_build, hamiltonian, quadrature);
criterion_main!(benches);
