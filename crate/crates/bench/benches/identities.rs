use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use riordan::identities::{check_andrews, lookup, AndrewsVariant, Grid};
use riordan::BuiltinArray;

fn extraction(c: &mut Criterion) {
    let mut group = c.benchmark_group("riordan");
    for base in BuiltinArray::ALL {
        group.bench_function(format!("extract {base} p=3 r=1"), |b| {
            b.iter(|| {
                base.array(3 * 30 + 2)
                    .and_then(|a| a.extract_subarray(3, black_box(1)))
            })
        });
    }
    let pascal = BuiltinArray::Pascal.array(60).unwrap();
    group.bench_function("materialize pascal 60", |b| {
        b.iter(|| pascal.materialize(black_box(60)))
    });
    group.finish();
}

fn registry(c: &mut Criterion) {
    let mut group = c.benchmark_group("identities");
    group.sample_size(10);
    group.bench_function("andrews-a122 n<=200", |b| {
        b.iter(|| check_andrews(AndrewsVariant::A122, black_box(200)))
    });
    let grid = Grid::with_max_n(12);
    for id in ["pascal-extraction", "rothe-hagen", "product-law-a"] {
        let spec = lookup(id).unwrap();
        group.bench_function(format!("{id} n<=12"), |b| {
            b.iter(|| spec.check(black_box(&grid)))
        });
    }
    group.finish();
}

criterion_group!(benches, extraction, registry);
criterion_main!(benches);
