use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qlink_core::cert::suites::{closure_properties, hopf_annihilation, whitehead_summand, SEED};
use qlink_core::par::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn hopf_grid(c: &mut Criterion) {
    let mut g = c.benchmark_group("hopf_annihilation_10x10");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| hopf_annihilation(black_box([10, 10]), exec))
        });
    }
    g.finish();
}

fn whitehead_grid(c: &mut Criterion) {
    let mut g = c.benchmark_group("whitehead_summand_5x5");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| whitehead_summand(black_box([5, 5]), exec))
        });
    }
    g.finish();
}

fn random_closures(c: &mut Criterion) {
    let mut g = c.benchmark_group("closure_properties_8");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| closure_properties(black_box(8), SEED, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, hopf_grid, whitehead_grid, random_closures);
criterion_main!(benches);
