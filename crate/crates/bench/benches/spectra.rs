use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use signed_spectra::invariants::{balanced_cliques, frustration_index, motzkin_straus_value};
use signed_spectra::spectra::{adjacency_spectrum, laplacian_spectrum};
use signed_spectra::{generate, Family, FamilySpec, SignedGraph};

fn cycle(n: usize) -> SignedGraph {
    generate(&FamilySpec::new(Family::SignedCycle, [n, 1])).unwrap()
}

fn gamma(n: usize) -> SignedGraph {
    generate(&FamilySpec::new(Family::Gamma1N3, [n])).unwrap()
}

fn eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigensolver");
    for n in [8, 16, 32, 64] {
        let g = gamma(n);
        group.bench_with_input(BenchmarkId::new("adjacency", n), &g, |b, g| {
            b.iter(|| adjacency_spectrum(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("laplacian", n), &g, |b, g| {
            b.iter(|| laplacian_spectrum(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariants");
    for n in [8, 12, 16] {
        let g = gamma(n);
        group.bench_with_input(BenchmarkId::new("balanced_cliques", n), &g, |b, g| {
            b.iter(|| balanced_cliques(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("motzkin_straus", n), &g, |b, g| {
            b.iter(|| motzkin_straus_value(black_box(g), 10, 7).unwrap())
        });
    }
    for n in [12, 18, 22] {
        let g = cycle(n);
        group.bench_with_input(BenchmarkId::new("frustration_index", n), &g, |b, g| {
            b.iter(|| frustration_index(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, eigensolver, invariants);
criterion_main!(benches);
