use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use signed_spectra::atlas::{enumerate_switching_classes, enumerate_underlying};
use signed_spectra::{scan, ScanOptions, TheoremId};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for n in [5, 6] {
        group.bench_with_input(BenchmarkId::new("underlying", n), &n, |b, &n| {
            b.iter(|| enumerate_underlying(black_box(n)).unwrap())
        });
    }
    let graphs = enumerate_underlying(6).unwrap();
    group.bench_function("switching_classes/6", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|u| enumerate_switching_classes(u).unwrap().len())
                .sum::<usize>()
        })
    });
    group.finish();
}

fn theorem_scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_n5");
    group.sample_size(10);
    for t in [TheoremId::Ad1, TheoremId::Lp1, TheoremId::BoundComparison] {
        group.bench_function(t.as_str(), |b| {
            b.iter(|| scan(black_box(t), 5, &ScanOptions::default(), None).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, theorem_scans);
criterion_main!(benches);
