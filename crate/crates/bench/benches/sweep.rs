use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hessenberg_bench::group;
use hessenberg_core::betti::betti_profile;
use hessenberg_core::hessenberg::{enumerate_hessenberg_spaces, weyl_type_subsets};
use hessenberg_core::{
    run_sweep, Bijector, RootSystem, RootType, SimpleSubset, SweepConfig, WeylGroup,
};

fn generation(c: &mut Criterion) {
    for (kind, rank) in [(RootType::F, 4), (RootType::E, 6)] {
        c.bench_function(&format!("generate {kind}{rank}"), |b| {
            b.iter(|| WeylGroup::generate(RootSystem::new(kind, rank).unwrap(), 100_000).unwrap())
        });
    }
}

fn profiles(c: &mut Criterion) {
    let g = group(RootType::F, 4);
    let spaces = enumerate_hessenberg_spaces(g.root_system(), 1_000_000).unwrap();
    c.bench_function("F4 betti profiles, all spaces, J = Δ", |b| {
        b.iter(|| {
            for s in &spaces {
                black_box(betti_profile(&g, SimpleSubset::full(4), s));
            }
        })
    });
    c.bench_function("F4 Weyl-type subsets, all spaces", |b| {
        b.iter(|| {
            for s in &spaces {
                black_box(weyl_type_subsets(&g, s));
            }
        })
    });
}

fn bijection(c: &mut Criterion) {
    let g = group(RootType::B, 3);
    let spaces = enumerate_hessenberg_spaces(g.root_system(), 1_000_000).unwrap();
    let j = SimpleSubset(0b011);
    c.bench_function("B3 bijection, all spaces, J = {1,2}", |b| {
        b.iter(|| {
            for s in &spaces {
                let mut bij = Bijector::new(&g, s, j);
                for w in g.elements() {
                    let _ = black_box(bij.map(w));
                }
            }
        })
    });
}

fn sweep(c: &mut Criterion) {
    let config = SweepConfig {
        max_rank: 2,
        ..Default::default()
    };
    c.bench_function("verify rank 2", |b| b.iter(|| run_sweep(&config).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = generation, profiles, bijection, sweep
}
criterion_main!(benches);
