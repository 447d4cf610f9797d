//! Benchmarks of the exact-arithmetic hot paths at the sizes the library
//! actually uses: pfaffians of the 8x8 Aronhold matrix, construction and
//! Bareiss elimination of the 45x45 seven-secant matrix, catalecticant
//! determinants and the Scorza map.
//!
//! The 45x45 determinant dominates everything else by orders of magnitude
//! (bigint entries grow along the elimination), so that group runs with a
//! reduced sample count.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use waring::{
    aronhold_invariant, build_bprime, build_c, det_b, p_invariant, random_form,
    random_powers_sum, scorza_map,
};

fn plane_cubics(c: &mut Criterion) {
    let f = random_form(3, 3, 7, 9);
    c.bench_function("aronhold_invariant", |b| {
        b.iter(|| aronhold_invariant(black_box(&f)).unwrap());
    });
}

fn quinary_cubics(c: &mut Criterion) {
    let f = random_form(5, 3, 7, 9);
    // A sum of seven cubes: the degenerate case, where rank matters.
    let member = random_powers_sum(5, 3, 7, 11, 3).1;

    c.bench_function("build_bprime_50x50", |b| {
        b.iter(|| build_bprime(black_box(&f)).unwrap());
    });

    let mut group = c.benchmark_group("secant7");
    group.sample_size(10);
    group.bench_function("det_b_generic", |b| {
        b.iter(|| det_b(black_box(&f)).unwrap());
    });
    group.bench_function("p_invariant_generic", |b| {
        b.iter(|| p_invariant(black_box(&f)).unwrap());
    });
    group.bench_function("det_b_on_member", |b| {
        b.iter(|| det_b(black_box(&member)).unwrap());
    });
    group.finish();
}

fn quartics(c: &mut Criterion) {
    let f = random_form(3, 4, 7, 9);
    c.bench_function("catalecticant_det_6x6", |b| {
        b.iter(|| build_c(black_box(&f)).unwrap().matrix.det().unwrap());
    });
    c.bench_function("scorza_map", |b| {
        b.iter(|| scorza_map(black_box(&f)).unwrap());
    });
}

criterion_group!(benches, plane_cubics, quinary_cubics, quartics);
criterion_main!(benches);
