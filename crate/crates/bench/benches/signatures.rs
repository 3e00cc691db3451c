use std::hint::black_box;

use cobound::braid::{cable, torus_braid};
use cobound::{
    alexander_polynomial, bound_report, lt_signature, seifert_matrix, signature, torus_signature, BoundConfig,
    RationalAngle,
};
use criterion::{criterion_group, criterion_main, Criterion};

fn seifert_forms(c: &mut Criterion) {
    let w = torus_braid(7, 11).unwrap();
    c.bench_function("seifert_matrix T(7,11)", |b| b.iter(|| seifert_matrix(black_box(&w))));
    let v = seifert_matrix(&w);
    c.bench_function("signature T(7,11)", |b| b.iter(|| signature(black_box(&v))));
    c.bench_function("alexander T(7,11)", |b| b.iter(|| alexander_polynomial(black_box(&v))));
}

fn lt_signatures(c: &mut Criterion) {
    let v = seifert_matrix(&torus_braid(5, 12).unwrap());
    let t = RationalAngle::new(7, 31).unwrap();
    c.bench_function("lt_signature T(5,12) at 7/31", |b| {
        b.iter(|| lt_signature(black_box(&v), t))
    });
    let k = seifert_matrix(&cable(&torus_braid(2, 3).unwrap(), 4, true).unwrap());
    c.bench_function("lt_signature C(4,1)(T(2,3)) at 1/3", |b| {
        b.iter(|| lt_signature(black_box(&k), RationalAngle::third()))
    });
}

fn formulas(c: &mut Criterion) {
    c.bench_function("torus_signature T(61,97)", |b| {
        b.iter(|| torus_signature(black_box(61), black_box(97)))
    });
    let cfg = BoundConfig::default();
    c.bench_function("bound_report m=18 k=3", |b| {
        b.iter(|| bound_report(black_box(18), 3, 137, &cfg))
    });
}

criterion_group!(benches, seifert_forms, lt_signatures, formulas);
criterion_main!(benches);
