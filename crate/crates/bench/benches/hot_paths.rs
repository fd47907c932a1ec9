use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;

use triline::scattering::{channel_energy, coefficient_a, recurrence_residual, scattering_solution};
use triline::specfun::{bessel_k_imag_order, BesselEvalSpec};
use triline::sturmian::{adiabatic_roots, ModelParams};
use triline::wavefunction::{kl_integral, QuadratureSpec};
use triline::HyperPoint;

fn bench_bessel(c: &mut Criterion) {
    let spec = BesselEvalSpec::default();
    c.bench_function("bessel_k_imag_order t=3 x=1.5", |b| {
        b.iter(|| bessel_k_imag_order(std::hint::black_box(3.0), 1.5, &spec).unwrap())
    });
}

fn bench_kl_point(c: &mut Criterion) {
    let params = ModelParams::new(-1.0).unwrap();
    let energy = channel_energy(0.3, &params).unwrap();
    let sol = scattering_solution(0.3, &params).unwrap();
    let q = QuadratureSpec::default();
    let point = HyperPoint {
        radius: 2.0,
        theta: 0.1,
        sector: 0,
    };
    c.bench_function("kl_integral R=2 theta=0.1", |b| {
        b.iter(|| kl_integral(std::hint::black_box(point), &energy, &sol, &params, &q).unwrap())
    });
}

fn bench_smatrix_sweep(c: &mut Criterion) {
    let params = ModelParams::new(-1.0).unwrap();
    c.bench_function("scattering_solution sweep 100", |b| {
        b.iter(|| {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..100 {
                let k = 0.5 * (i as f64 / 100.0);
                acc += scattering_solution(std::hint::black_box(k), &params).unwrap().s;
            }
            acc
        })
    });
}

fn bench_recurrence(c: &mut Criterion) {
    let params = ModelParams::new(-1.0).unwrap();
    let energy = channel_energy(0.3, &params).unwrap();
    let sol = scattering_solution(0.3, &params).unwrap();
    let a = |nu: Complex64| coefficient_a(nu, &sol);
    c.bench_function("recurrence_residual nu=2i", |b| {
        b.iter(|| {
            recurrence_residual(&a, std::hint::black_box(Complex64::new(0.0, 2.0)), &energy, &params)
        })
    });
}

fn bench_adiabatic(c: &mut Criterion) {
    let params = ModelParams::new(-1.0).unwrap();
    c.bench_function("adiabatic_roots kappa<=12 R'=1", |b| {
        b.iter(|| adiabatic_roots(std::hint::black_box(1.0), &params, 12).unwrap())
    });
}

criterion_group!(
    benches,
    bench_bessel,
    bench_kl_point,
    bench_smatrix_sweep,
    bench_recurrence,
    bench_adiabatic
);
criterion_main!(benches);
