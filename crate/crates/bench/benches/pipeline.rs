use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tropic_bench::trees;
use tropic_core::degeneration::{certify, verify_certificate, NodeMonoid};
use tropic_core::num::int;
use tropic_core::{defspace, fixtures, refine, wellspaced};

fn balancing(c: &mut Criterion) {
    let mut g = c.benchmark_group("balancing");
    for v in [2, 4, 6] {
        let ts = trees(1, 16, 3, v);
        g.bench_with_input(BenchmarkId::from_parameter(v), &ts, |b, ts| {
            b.iter(|| ts.iter().all(|t| t.is_balanced().unwrap()))
        });
    }
    g.finish();
}

fn superabundance(c: &mut Criterion) {
    let mut g = c.benchmark_group("superabundance");
    for (name, curve) in [("cycle3", fixtures::cycle3()), ("speyer3", fixtures::speyer3())] {
        g.bench_function(name, |b| {
            b.iter(|| defspace::is_superabundant(black_box(&curve)).unwrap())
        });
    }
    let ts = trees(2, 16, 3, 6);
    g.bench_function("trees_r3_6", |b| {
        b.iter(|| {
            ts.iter()
                .map(|t| defspace::is_superabundant(t).unwrap().excess)
                .sum::<i64>()
        })
    });
    g.finish();
}

fn refine_and_certify(c: &mut Criterion) {
    let p2 = fixtures::fan_p2();
    let diag = fixtures::diag();
    c.bench_function("subdivide/diag_p2", |b| {
        b.iter(|| refine::subdivide_along_fan(black_box(&diag), &p2).unwrap())
    });
    let ratios = fixtures::ratios();
    c.bench_function("rescale/ratios", |b| {
        b.iter(|| refine::rescale_integral(black_box(&ratios)).unwrap())
    });

    let speyer = fixtures::speyer3();
    let fan = fixtures::fan_p3_speyer();
    c.bench_function("certify/speyer3", |b| {
        b.iter(|| certify(black_box(&speyer), &fan).unwrap())
    });
    let cert = certify(&speyer, &fan).unwrap();
    c.bench_function("verify/speyer3", |b| b.iter(|| verify_certificate(black_box(&cert))));
}

fn small_checks(c: &mut Criterion) {
    let speyer = fixtures::speyer3();
    c.bench_function("well_spaced/speyer3", |b| {
        b.iter(|| wellspaced::well_spaced(black_box(&speyer)).unwrap())
    });
    let m = NodeMonoid::new(int(7)).unwrap();
    c.bench_function("node_monoid/k7_grid30", |b| {
        b.iter(|| {
            let mut n = 0;
            for a in 0..=30 {
                for d in 0..=30 - a {
                    n += usize::from(m.contains(&int(a), &int(d)));
                }
            }
            n
        })
    });
}

criterion_group!(benches, balancing, superabundance, refine_and_certify, small_checks);
criterion_main!(benches);
