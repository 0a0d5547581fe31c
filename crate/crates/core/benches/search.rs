//! Wall-clock benchmarks: the surface search against the slice baseline,
//! and the sweep runner with rayon against its sequential fallback.
//! Comparison *counts* are covered by the test suites; these measure time.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

#[cfg(feature = "parallel")]
use monotone_search::harness::run_bench;
use monotone_search::algorithms::{search_nd, slice_search};
use monotone_search::comparator::CountingComparator;
use monotone_search::generate::{gen_monotone, GenStyle};
use monotone_search::harness::{run_bench_seq, Algorithm, ExperimentConfig, NRange};

/// One miss query (midpoint of the two central distinct values): the
/// hardest single call for both algorithms.
fn central_miss(values: &[f64]) -> f64 {
    let mut distinct = values.to_vec();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    let mid = distinct.len() / 2;
    (distinct[mid - 1] + distinct[mid]) / 2.0
}

fn d4_algorithms(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_d4_miss");
    for n in [8usize, 16, 24] {
        let a = gen_monotone(&vec![n; 4], 1, GenStyle::Strict).unwrap();
        let x = central_miss(a.values());
        group.bench_with_input(BenchmarkId::new("surface", n), &a, |b, a| {
            b.iter(|| {
                let mut cmp = CountingComparator::new(black_box(x));
                search_nd(a, &mut cmp).comparisons
            })
        });
        group.bench_with_input(BenchmarkId::new("slice", n), &a, |b, a| {
            b.iter(|| {
                let mut cmp = CountingComparator::new(black_box(x));
                slice_search(a, &mut cmp).comparisons
            })
        });
    }
    group.finish();
}

fn sweep_modes(c: &mut Criterion) {
    let mut cfg = ExperimentConfig::new(4, NRange { lo: 6, hi: 18, step: 4 });
    cfg.algorithm = Algorithm::Surface;
    cfg.trials = 2;
    cfg.sample_cap = Some(64);
    let mut group = c.benchmark_group("bench_sweep_d4");
    group.sample_size(20);
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| run_bench(black_box(&cfg)).unwrap().len())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| run_bench_seq(black_box(&cfg)).unwrap().len())
    });
    group.finish();
}

criterion_group!(benches, d4_algorithms, sweep_modes);
criterion_main!(benches);
