//! Sequential vs parallel exhaustive enumeration across space sizes.
//!
//! Run with `cargo bench -p weakchain`. Throughput is reported in
//! candidates per second so the two schedules are directly comparable.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use weakchain::{enumerate_keyspace_with, lookup, Parallelism};

fn enumeration_schedules(c: &mut Criterion) {
    let cases = [
        ("digits", 5u32),      // 100,000
        ("hexadecimal", 5),    // 1,048,576
        ("lowercase", 5),      // 11,881,376
    ];
    let cap = 20_000_000;

    let mut group = c.benchmark_group("enumeration");
    for (set_name, length) in cases {
        let set = lookup(set_name).expect("registry set");
        let space = (set.size() as u64).pow(length);
        group.throughput(Throughput::Elements(space));

        group.bench_with_input(
            BenchmarkId::new("sequential", format!("{set_name}-{length}")),
            &(&set, length),
            |b, (set, length)| {
                b.iter(|| {
                    enumerate_keyspace_with(set, *length, cap, Parallelism::Sequential)
                        .expect("space fits the cap")
                })
            },
        );
        group.bench_with_input(
            BenchmarkId::new("parallel", format!("{set_name}-{length}")),
            &(&set, length),
            |b, (set, length)| {
                b.iter(|| {
                    enumerate_keyspace_with(set, *length, cap, Parallelism::Parallel)
                        .expect("space fits the cap")
                })
            },
        );
    }
    group.finish();
}

criterion_group!(benches, enumeration_schedules);
criterion_main!(benches);
