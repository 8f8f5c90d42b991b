use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zeckendorf_core::oracle::{brute_occurrences_with, certify, empirical_density_with, CertifyConfig};
use zeckendorf_core::{DigitBlock, Execution};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn enumeration(c: &mut Criterion) {
    let w: DigitBlock = "0010".parse().unwrap();
    let mut group = c.benchmark_group("brute_occurrences");
    for (label, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(label, 1_000_000), &exec, |b, &exec| {
            b.iter(|| brute_occurrences_with(exec, &w, 2, 1_000_000))
        });
    }
    group.finish();
}

fn density_count(c: &mut Criterion) {
    let w: DigitBlock = "101".parse().unwrap();
    let mut group = c.benchmark_group("empirical_density");
    for (label, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(label, 1_000_000), &exec, |b, &exec| {
            b.iter(|| empirical_density_with(exec, &w, 1, 1_000_000))
        });
    }
    group.finish();
}

fn certification(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify");
    group.sample_size(10);
    for (label, exec) in MODES {
        let config = CertifyConfig { depth: 4, bound: 20_000, execution: exec, ..CertifyConfig::default() };
        group.bench_with_input(BenchmarkId::new(label, "depth4"), &config, |b, config| b.iter(|| certify(config)));
    }
    group.finish();
}

criterion_group!(benches, enumeration, density_count, certification);
criterion_main!(benches);
