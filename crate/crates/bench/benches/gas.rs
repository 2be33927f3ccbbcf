use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use photon_lab::constants::{BOLTZMANN, PLANCK};
use photon_lab::gas::ModeGasState;
use photon_lab::statistics::QuantumHypothesis;

fn state(modes: usize) -> ModeGasState {
    let t = 1500.0;
    let freqs: Vec<f64> = (0..modes)
        .map(|i| 2.0 * 0.1 * 50f64.powf(i as f64 / (modes - 1) as f64) * BOLTZMANN * t / PLANCK)
        .collect();
    ModeGasState::new(&freqs, t, QuantumHypothesis::half_quantum(), 1).unwrap()
}

fn sweeps(c: &mut Criterion) {
    c.bench_function("mc 1000 sweeps, 30 modes", |b| {
        b.iter_batched(
            || state(30),
            |mut s| {
                for _ in 0..1000 {
                    s.sweep();
                }
                black_box(s)
            },
            BatchSize::SmallInput,
        )
    });
    c.bench_function("mc run 20000 sweeps with statistics", |b| {
        b.iter_batched(|| state(30), |mut s| s.run(20_000, 1000).unwrap(), BatchSize::SmallInput)
    });
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
