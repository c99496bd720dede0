use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use trimlat::transforms::{dense_zeta, trimmed_zeta};
use trimlat::{cover_numbers, partition_numbers, FrontierFilter};
use trimlat_bench::{dense, k4_dominating_family, sparse_function};

fn zeta(c: &mut Criterion) {
    let mut group = c.benchmark_group("zeta");
    for n in [12, 16, 20] {
        let f = sparse_function(n, 32, n as u64);
        group.bench_with_input(BenchmarkId::new("dense", n), &f, |b, f| {
            b.iter(|| {
                let mut values = dense(f);
                dense_zeta(&mut values).unwrap();
                black_box(values)
            })
        });
        group.bench_with_input(BenchmarkId::new("trimmed", n), &f, |b, f| b.iter(|| black_box(trimmed_zeta(f))));
    }
    group.finish();
}

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("k4_union");
    group.sample_size(10);
    let all = FrontierFilter::accept_all();
    for copies in [2, 3, 4] {
        let family = k4_dominating_family(copies);
        group.bench_with_input(BenchmarkId::new("cover", 4 * copies), &family, |b, f| {
            b.iter(|| black_box(cover_numbers(f, 4, &all).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("partition", 4 * copies), &family, |b, f| {
            b.iter(|| black_box(partition_numbers(f, 4, &all).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, zeta, counting);
criterion_main!(benches);
