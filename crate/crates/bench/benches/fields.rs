use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use photon_lab::constants::SPEED_OF_LIGHT_CGS;
use photon_lab::em::{
    multipole_shell_ratio, tensors_at, volume_integral_checks, CompactWavePacket, FieldConfiguration, Gauge, Jones,
    PlaneWave, VolumeGrid,
};
use photon_lab::model::{period_integral, LoopPath, PeriodOptions, Vortex};
use photon_lab::numerics::Grid4;

fn packet() -> CompactWavePacket {
    CompactWavePacket::new(4.0, 1.0, [0.5, -0.3, 0.2], 1.0, Jones::new(Complex64::new(0.8, 0.0), Complex64::new(0.0, 0.6)))
        .unwrap()
}

fn pointwise(c: &mut Criterion) {
    let cfg = FieldConfiguration::from(PlaneWave::new([0.0, 1.0, 2.0], Jones::circular(1), 1.0).unwrap());
    let fd = Grid4::uniform(1e-3).unwrap();
    c.bench_function("tensors at a point, plane wave", |b| {
        b.iter(|| tensors_at(&cfg, &Gauge::Radiation, black_box([0.1, 0.2, 0.3, 0.4]), &fd))
    });
    let k = 1e10 / SPEED_OF_LIGHT_CGS;
    c.bench_function("multipole shell ratio (2,1)", |b| {
        b.iter(|| multipole_shell_ratio(2, 1, 1e10, black_box(20.0 / k), 0.1 / k).unwrap())
    });
}

fn integrals(c: &mut Criterion) {
    let mut g = c.benchmark_group("volume");
    g.sample_size(10);
    let p = packet();
    let grid = VolumeGrid::cube([0.0; 3], 7.5, 0.5, 0.01, 0.0).unwrap();
    g.bench_function("packet volume checks, step 0.5 sigma", |b| {
        b.iter(|| volume_integral_checks(&p, &Gauge::Radiation, &grid).unwrap())
    });
    g.finish();
    let path = LoopPath::circle([0.0; 3], 1.0, 3).unwrap();
    c.bench_function("vortex period integral, 3 windings", |b| {
        b.iter(|| period_integral(&Vortex::hbar(), black_box(&path), &PeriodOptions::default()).unwrap())
    });
}

criterion_group!(benches, pointwise, integrals);
criterion_main!(benches);
