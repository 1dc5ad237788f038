use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cliffgate::closure::{close, GeneratorSet};
use cliffgate::exec::Exec;
use cliffgate::matrix::oracle::homomorphism;
use cliffgate::synthesis::{trotter, CoefficientVector, ErrorMetric};

fn paths() -> Vec<(&'static str, Exec)> {
    let mut p = vec![("sequential", Exec::Sequential)];
    if Exec::parallel_available() {
        p.push(("parallel", Exec::Parallel));
    }
    p
}

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    group.sample_size(10);
    let cases = [
        ("triple/8", GeneratorSet::with_triple(8).unwrap()),
        ("triple/10", GeneratorSet::with_triple(10).unwrap()),
        ("generators/16", GeneratorSet::generators_only(16).unwrap()),
    ];
    for (name, gens) in &cases {
        for (path, exec) in paths() {
            group.bench_with_input(BenchmarkId::new(*name, path), gens, |b, g| {
                b.iter(|| black_box(close(g, exec)).dimension())
            });
        }
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("homomorphism");
    group.sample_size(10);
    for (path, exec) in paths() {
        group.bench_function(BenchmarkId::new("n3", path), |b| {
            b.iter(|| homomorphism(black_box(3), exec).unwrap())
        });
    }
    group.finish();
}

fn product_formula(c: &mut Criterion) {
    let coeffs = CoefficientVector::new(
        3,
        cliffgate::clifford::BasisLabel::all(6)
            .into_iter()
            .filter(|l| !l.is_unit())
            .enumerate()
            .map(|(k, l)| (l, ((k as f64) * 0.37).sin() / 8.0))
            .collect(),
    )
    .unwrap();
    c.bench_function("trotter/n3/N16", |b| {
        b.iter(|| trotter(black_box(&coeffs), 16, ErrorMetric::PhaseSensitive).unwrap())
    });
}

criterion_group!(benches, closure, oracle, product_formula);
criterion_main!(benches);
