//! Backend comparison benches. Run once with the default features and once
//! with `--no-default-features`; the group names carry the active backend so
//! criterion keeps the two result sets side by side.

use betti_core::exec::backend;
use betti_core::families::{construct, FamilySpec};
use betti_core::field::FieldSpec;
use betti_core::homology::{total_reduced_betti, Setting};
use betti_core::search::{extremal_betti, HPattern, SearchConfig};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("enumerate/{}", backend()));
    group.sample_size(10);
    group.bench_function("all-classes-n7", |b| {
        b.iter(|| {
            let levels = betti_core::enumerate::enumerate_levels(7, None, false).unwrap();
            black_box(levels.last().unwrap().graphs.len())
        })
    });
    let k4 = construct(&FamilySpec::Complete(4)).unwrap();
    group.bench_function("k4-free-n8", |b| {
        b.iter(|| {
            let levels = betti_core::enumerate::enumerate_levels(8, Some(&k4), false).unwrap();
            black_box(levels.last().unwrap().graphs.len())
        })
    });
    group.finish();
}

fn bench_scoring(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("score/{}", backend()));
    group.sample_size(10);
    let graphs = betti_core::enumerate::enumerate_hfree(7, None, false).unwrap();
    group.bench_function("betti-totals-n7", |b| {
        b.iter(|| {
            let totals = betti_core::exec::par_map(&graphs, |g| {
                total_reduced_betti(g, FieldSpec::GF2, Setting::Independence).unwrap()
            });
            black_box(totals.iter().max().copied())
        })
    });
    group.bench_function("search-none-n6", |b| {
        b.iter(|| {
            let report = extremal_betti(&HPattern::None, &SearchConfig::new(6)).unwrap();
            black_box(report.cumulative_max(6))
        })
    });
    group.finish();
}

criterion_group!(backends, bench_enumerate, bench_scoring);
criterion_main!(backends);
