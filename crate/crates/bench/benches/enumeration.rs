use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use sexpand_core::{canonical_form, enumerate, Equivalence};

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for order in [3usize, 4, 5] {
        group.bench_function(format!("order_{order}"), |b| {
            b.iter(|| {
                enumerate(black_box(order), Equivalence::IsoAndAnti)
                    .unwrap()
                    .len()
            })
        });
    }
    group.sample_size(10);
    group.bench_function("order_6", |b| {
        b.iter(|| {
            enumerate(black_box(6), Equivalence::IsoAndAnti)
                .unwrap()
                .len()
        })
    });
    group.finish();
}

fn bench_canonical_form(c: &mut Criterion) {
    let cat = enumerate(5, Equivalence::IsoAndAnti).unwrap();
    let t = cat.tables()[cat.len() / 2].clone();
    c.bench_function("canonical_form/order_5", |b| {
        b.iter(|| canonical_form(black_box(&t), true).unwrap())
    });
}

criterion_group!(benches, bench_enumerate, bench_canonical_form);
criterion_main!(benches);
