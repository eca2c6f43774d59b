use std::hint::black_box;

use colorpack::{predicted_bins, solve, validate_packing};
use colorpack_bench::{instances, SIZES};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

fn scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(20);
    for n in SIZES {
        for (branch, instance) in instances(n) {
            group.throughput(Throughput::Elements(n as u64));
            group.bench_with_input(BenchmarkId::new(branch.as_str(), n), &instance, |b, i| {
                b.iter(|| solve(black_box(i)).unwrap())
            });
        }
    }
    group.finish();
}

fn predict_and_validate(c: &mut Criterion) {
    let n = 200_000;
    let mut group = c.benchmark_group("support");
    for (branch, instance) in instances(n) {
        let packing = solve(&instance).unwrap();
        group.bench_with_input(
            BenchmarkId::new("predict", branch.as_str()),
            &instance,
            |b, i| b.iter(|| predicted_bins(black_box(i))),
        );
        group.bench_function(BenchmarkId::new("validate", branch.as_str()), |b| {
            b.iter(|| validate_packing(black_box(&instance), black_box(&packing)))
        });
    }
    group.finish();
}

criterion_group!(benches, scaling, predict_and_validate);
criterion_main!(benches);
