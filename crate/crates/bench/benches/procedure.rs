use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fatpoint3::{
    classify_homogeneous, conjectured_dimension, line_orbit, reduce_to_standard, LinearSystem,
};

const SYSTEMS: [&str; 5] = ["12 7^6", "10 6^5", "16 11 7^8", "4 2^10", "40 21^9 3^6"];

fn procedure(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjectured_dimension");
    for lit in SYSTEMS {
        let l: LinearSystem = lit.parse().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(lit), &l, |b, l| {
            b.iter(|| conjectured_dimension(black_box(l)))
        });
    }
    group.finish();

    c.bench_function("reduce_to_standard/120 60^12", |b| {
        let l: LinearSystem = "120 60^12".parse().unwrap();
        b.iter(|| reduce_to_standard(black_box(&l)))
    });
}

fn grid_scan(c: &mut Criterion) {
    c.bench_function("scan d<=20 m<=7 r<=20", |b| {
        b.iter(|| {
            let mut special = 0usize;
            for d in 0..=20 {
                for m in 1..=7 {
                    for r in 1..=20 {
                        let l = LinearSystem::homogeneous(d, m, r);
                        let report = conjectured_dimension(black_box(&l));
                        special += usize::from(report.dimension > l.expected_dimension());
                        black_box(classify_homogeneous(d, m, r));
                    }
                }
            }
            special
        })
    });
}

fn orbit(c: &mut Criterion) {
    c.bench_function("line_orbit 8 points degree 8", |b| {
        b.iter(|| line_orbit(black_box(8), 8))
    });
}

criterion_group!(benches, procedure, grid_scan, orbit);
criterion_main!(benches);
