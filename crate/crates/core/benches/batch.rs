//! Sequential vs rayon paths for seed batches and grid oracles.
//!
//! `cargo bench -p lab-core --bench batch`

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use lab_core::batch::{run_batch_parallel, run_batch_sequential};
use lab_core::grid::{grid_search_parallel, grid_search_sequential};
use lab_core::{benchmarks, machining, Algorithm, BatchConfig};

fn batches(c: &mut Criterion) {
    let mut g = c.benchmark_group("run_batch");
    g.sample_size(10);
    for id in ["F10", "F5"] {
        let problem = benchmarks::lookup(id).unwrap().problem;
        let cfg = BatchConfig::new(Algorithm::Lab, 30, 0);
        g.bench_with_input(BenchmarkId::new("sequential", id), &problem, |b, p| {
            b.iter(|| run_batch_sequential(black_box(p), &cfg).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("parallel", id), &problem, |b, p| {
            b.iter(|| run_batch_parallel(black_box(p), &cfg).unwrap())
        });
    }
    g.finish();
}

fn grids(c: &mut Criterion) {
    let mut g = c.benchmark_group("grid_oracle");
    g.sample_size(10);
    for (id, m) in [("turning:fb", 101), ("awjm:kerf", 31)] {
        let problem = machining::lookup(id).unwrap().problem;
        let label = format!("{id}/{m}");
        g.bench_with_input(BenchmarkId::new("sequential", &label), &problem, |b, p| {
            b.iter(|| grid_search_sequential(black_box(p), m).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("parallel", &label), &problem, |b, p| {
            b.iter(|| grid_search_parallel(black_box(p), m).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, batches, grids);
criterion_main!(benches);
