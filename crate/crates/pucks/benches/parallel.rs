//! Compares the rayon-backed audit and grid verification against their
//! sequential baselines.
//!
//! Build with default features to get the parallel variants; with
//! `--no-default-features` both sides of each comparison run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pucks::identity::{verify_grid, DEFAULT_BUDGET};
use pucks::involution::{audit, audit_seq, enumerate_universe};

fn bench_audit(c: &mut Criterion) {
    let mut group = c.benchmark_group("audit");
    group.sample_size(10);
    for (k, n, r) in [(4usize, 2usize, 2usize), (5, 3, 3)] {
        let size = enumerate_universe(k, n, r).len();
        let label = format!("k{k}_n{n}_r{r}_{size}el");
        group.bench_with_input(BenchmarkId::new("parallel", &label), &(k, n, r), |b, &(k, n, r)| {
            b.iter(|| audit(k, n, r))
        });
        group.bench_with_input(BenchmarkId::new("sequential", &label), &(k, n, r), |b, &(k, n, r)| {
            b.iter(|| audit_seq(k, n, r))
        });
    }
    group.finish();
}

fn bench_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_grid");
    group.sample_size(10);
    // Audited grid at the exhaustive-audit scale.
    group.bench_function("parallel_r3_n3_k5_audit", |b| {
        b.iter(|| verify_grid(3, 3, 5, true, DEFAULT_BUDGET).unwrap())
    });
    group.bench_function("sequential_r3_n3_k5_audit", |b| {
        b.iter(|| {
            (0..=5)
                .map(|k| pucks::identity::verify(k, 3, 3, true, DEFAULT_BUDGET).unwrap())
                .collect::<Vec<_>>()
        })
    });
    // Closed-form-only grid at the full verification scale.
    group.bench_function("parallel_r4_n5_k12", |b| {
        b.iter(|| verify_grid(4, 5, 12, false, DEFAULT_BUDGET).unwrap())
    });
    group.bench_function("sequential_r4_n5_k12", |b| {
        b.iter(|| {
            (0..=12)
                .map(|k| pucks::identity::verify(k, 5, 4, false, DEFAULT_BUDGET).unwrap())
                .collect::<Vec<_>>()
        })
    });
    group.finish();
}

criterion_group!(benches, bench_audit, bench_grid);
criterion_main!(benches);
