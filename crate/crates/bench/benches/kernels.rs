use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use hgperiod::characters::enumerate_exceptional;
use hgperiod::identities::{closed_form, sample_parameters, verify};
use hgperiod::numerics::{f32_at_1, f32_at_1_q, gamma1_double, quad_1d, IntegrandSpec};
use hgperiod::rational::q;
use hgperiod::symbolic::{eval_logcomb, Denominator, Poly};

fn series(c: &mut Criterion) {
    c.bench_function("f32_at_1 f64 1e-12", |b| b.iter(|| f32_at_1(black_box(0.25), 1.5, 1.75, 1e-12).unwrap()));
    c.bench_function("f32_at_1_q 50 digits", |b| {
        b.iter(|| f32_at_1_q(black_box(q(1, 3)), q(4, 3), q(5, 3), 50).unwrap())
    });
}

fn quadrature(c: &mut Criterion) {
    let den = Denominator::binomial(q(1, 1), 3, q(1, 1)).unwrap();
    let f = IntegrandSpec::rational(-0.5, 1.0, Poly::from_ints(&[1]), den);
    c.bench_function("quad_1d x^-1/2/(x^3+1)", |b| b.iter(|| quad_1d(black_box(&f), 1e-13).unwrap()));
    c.bench_function("gamma1_double", |b| b.iter(|| gamma1_double(black_box(0.7), 0.4, 1.2, 1e-10).unwrap()));
}

fn closed_forms(c: &mut Criterion) {
    let p = sample_parameters("G3-4m", 1, 7).unwrap().remove(0);
    c.bench_function("closed_form G3-4m 50 digits", |b| {
        b.iter(|| eval_logcomb(&closed_form(black_box("G3-4m"), &p).unwrap(), 50).unwrap())
    });
    c.bench_function("verify G1-3m", |b| {
        let p = sample_parameters("G1-3m", 1, 7).unwrap().remove(0);
        b.iter(|| verify(black_box("G1-3m"), &p, 30, 1e-8).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_exceptional");
    g.sample_size(10);
    for m in [60u32, 120, 180] {
        g.bench_function(format!("m={m}"), |b| b.iter(|| enumerate_exceptional(black_box(m))));
    }
    g.finish();
}

criterion_group!(benches, series, quadrature, closed_forms, enumeration);
criterion_main!(benches);
