//! Cross-module checks through the public API.

use photon_lab::constants::{BOLTZMANN, HBAR, PLANCK, SPEED_OF_LIGHT};
use photon_lab::gas::{run_chains, spectrum_estimate, ModeGasState};
use photon_lab::model::{energy_split, period_integral, LoopPath, PeriodOptions, PhotonState, Vortex};
use photon_lab::spectral::{log_grid, spectrum, stefan_fit, SpectralLaw};
use photon_lab::{compose_law, QuantumHypothesis, SpectralConstants};
use proptest::prelude::*;

#[test]
fn cli_law_names_parse() {
    for name in ["planck", "rayleigh-jeans", "wien", "half-quantum", "pair-planck", "planck-second", "zero-point"] {
        let law: SpectralLaw = name.parse().unwrap();
        assert_eq!(law.to_string(), name);
    }
    assert!("planck2".parse::<SpectralLaw>().is_err());
}

#[test]
fn composed_presets_tabulate_like_named_laws() {
    let grid = log_grid(1e11, 1e15, 64).unwrap();
    for h in [
        QuantumHypothesis::single_photon(),
        QuantumHypothesis::half_quantum(),
        QuantumHypothesis::photon_pair(),
        QuantumHypothesis::equipartition(),
    ] {
        let law = compose_law(h);
        let named = law.named().unwrap();
        let s = spectrum(named, 2500.0, &grid).unwrap();
        for p in &s.samples {
            let u = law.evaluate(p.nu, 2500.0).unwrap();
            assert!((u - p.u).abs() <= 1e-14 * p.u, "{}: {u} vs {}", h.label(), p.u);
        }
    }
}

#[test]
fn planck_fit_recovers_radiation_constant() {
    let f = stefan_fit(SpectralLaw::Planck, &[300.0, 600.0, 1200.0]).unwrap();
    let a = SpectralConstants::SI.radiation_constant();
    assert!((f.prefactor - a).abs() < 1e-9 * a);
}

#[test]
fn parallel_chains_match_serial_runs() {
    let t = 800.0;
    let freqs: Vec<f64> = [0.3, 1.0, 2.0].iter().map(|x| x * BOLTZMANN * t / PLANCK).collect();
    let h = QuantumHypothesis::photon_pair();
    let mut states: Vec<_> = (0..3).map(|s| ModeGasState::new(&freqs, t, h, s).unwrap()).collect();
    let parallel = run_chains(&mut states, 40_000, 2_000);
    for (seed, r) in parallel.into_iter().enumerate() {
        let mut serial = ModeGasState::new(&freqs, t, h, seed as u64).unwrap();
        let stats = r.unwrap();
        assert_eq!(serial.run(40_000, 2_000).unwrap(), stats);
        let est = spectrum_estimate(&stats, &serial).unwrap();
        for s in &est.samples {
            let exact = SpectralLaw::PairPlanck.evaluate(s.nu, t).unwrap();
            assert!((s.u - exact).abs() < 6.0 * s.u_err.unwrap(), "{} vs {exact}", s.u);
        }
    }
}

#[test]
fn photon_state_carries_one_hbar_of_spin() {
    let p = PhotonState::new(5e14, [0.0, 3.0, 4.0], -1).unwrap();
    let s = p.spin();
    let mag = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
    assert!((mag - HBAR).abs() < 1e-15 * HBAR);
    let q = p.momentum();
    let pc = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2]).sqrt() * SPEED_OF_LIGHT;
    assert!((pc - p.energy()).abs() < 1e-15 * p.energy());
    let split = p.energy_split().unwrap();
    assert_eq!(split.spin_exact, split.translational_exact);
}

#[test]
fn vortex_period_counts_windings_off_axis() {
    let opts = PeriodOptions::default();
    let around = LoopPath::ellipse([0.3, -0.2, 1.0], 2.0, 0.7, -2).unwrap();
    let r = period_integral(&Vortex::hbar(), &around, &opts).unwrap();
    assert!((r.value + 2.0 * HBAR).abs() < 1e-9 * HBAR);
    let outside = LoopPath::circle([3.0, 0.0, 0.0], 1.0, 1).unwrap();
    let r = period_integral(&Vortex::hbar(), &outside, &opts).unwrap();
    assert!(r.value.abs() < 1e-12 * r.magnitude);
}

proptest! {
    #[test]
    fn split_halves_sum_to_photon_energy(lnu in 3.0f64..20.0) {
        let nu = 10f64.powf(lnu);
        let s = energy_split(nu).unwrap();
        prop_assert!(s.parts_equal);
        prop_assert!((s.total - PLANCK * nu).abs() <= 1e-15 * PLANCK * nu);
    }
}
