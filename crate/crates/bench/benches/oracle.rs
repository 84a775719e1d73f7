use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fatpoint3::{oracle_dimension, LinearSystem, OracleConfig};

fn oracle(c: &mut Criterion) {
    let single = OracleConfig {
        seeds: vec![1],
        ..OracleConfig::default()
    };
    let mut group = c.benchmark_group("oracle_rank");
    group.sample_size(10);
    for lit in ["8 4^10", "12 7^6", "16 11 7^8"] {
        let l: LinearSystem = lit.parse().unwrap();
        group.bench_with_input(BenchmarkId::new("mersenne", lit), &l, |b, l| {
            b.iter(|| oracle_dimension(black_box(l), &single).unwrap())
        });
    }
    let generic = OracleConfig {
        prime: 65521,
        ..single.clone()
    };
    let l: LinearSystem = "16 11 7^8".parse().unwrap();
    group.bench_function("generic_prime/16 11 7^8", |b| {
        b.iter(|| oracle_dimension(black_box(&l), &generic).unwrap())
    });
    group.finish();
}

criterion_group!(benches, oracle);
criterion_main!(benches);
