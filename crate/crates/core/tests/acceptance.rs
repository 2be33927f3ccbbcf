//! Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if any
//! criterion fails.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use photon_lab::constants::{BOLTZMANN, HBAR, PLANCK, SPEED_OF_LIGHT, SPEED_OF_LIGHT_CGS};
use photon_lab::em::{
    energy_momentum_densities, multipole_shell_ratio, refinement_check, CompactWavePacket, FieldConfiguration,
    Gauge, GaugeFunction, Jones, PlaneWave, VolumeGrid,
};
use photon_lab::gas::{spectrum_estimate, ModeGasState};
use photon_lab::model::{
    classical_split, energy_split, flux_integral, period_integral, photon_classical_inputs, photon_energy_exact,
    BeamModel, Curl, FluxOptions, GradientField, LoopPath, PeriodOptions, SurfacePatch, Vortex,
};
use photon_lab::numerics::RandomStream;
use photon_lab::spectral::{compare, log_grid, stefan_fit, SpectralLaw};
use photon_lab::statistics::{mean_occupancy, partition_average_energy, QuantumHypothesis};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn pair_law_recovery() -> Outcome {
    let mut worst: f64 = 0.0;
    for t in [300.0, 3000.0, 30000.0] {
        let nu_t = BOLTZMANN * t / PLANCK;
        let grid = log_grid(1e-3 * nu_t, 50.0 * nu_t, 400).unwrap();
        let c = compare(SpectralLaw::PairPlanck, SpectralLaw::Planck, &grid, t).unwrap();
        worst = worst.max(c.max_rel_dev);
    }
    outcome(worst < 1e-12, format!("max relative deviation {worst:.3e} (limit 1e-12)"))
}

fn rayleigh_jeans_limit() -> Outcome {
    let t = 1000.0;
    let nu_of = |x: f64| 2.0 * x * BOLTZMANN * t / PLANCK;
    let dev = |x_max: f64, points: usize| {
        let grid = log_grid(nu_of(1e-8), nu_of(x_max), points).unwrap();
        compare(SpectralLaw::HalfQuantum, SpectralLaw::RayleighJeans, &grid, t)
            .unwrap()
            .max_rel_dev
    };
    let base = dev(1e-4, 200);
    let limits = [1e-4, 5e-5, 2.5e-5, 1.25e-5];
    let devs: Vec<f64> = limits.iter().map(|&x| dev(x, 400)).collect();
    let slopes: Vec<f64> = devs.iter().zip(&limits).map(|(d, x)| d / x).collect();
    let ratios: Vec<f64> = devs.windows(2).map(|w| w[0] / w[1]).collect();
    let linear = slopes.iter().all(|s| (s - 0.5).abs() < 0.01) && ratios.iter().all(|r| (r - 2.0).abs() < 0.02);
    outcome(
        base < 1e-4 && linear,
        format!("max relative deviation {base:.3e} (limit 1e-4); deviation / (h nu/2kT) = {slopes:.6?}; halving ratios {ratios:.4?}"),
    )
}

fn stefan_boltzmann() -> Outcome {
    let temps = [500.0, 1000.0, 2000.0, 4000.0];
    let mut pass = true;
    let mut parts = Vec::new();
    let mut slope_of = |law: SpectralLaw| {
        let f = stefan_fit(law, &temps).unwrap();
        pass &= (f.slope - 4.0).abs() <= 1e-6;
        parts.push(format!("{law} slope {:.9}", f.slope));
        f
    };
    let planck = slope_of(SpectralLaw::Planck);
    let half = slope_of(SpectralLaw::HalfQuantum);
    slope_of(SpectralLaw::PairPlanck);
    let a = planck.prefactor;
    let prefactor_ok = (a - 7.5657e-16).abs() / 7.5657e-16 < 1e-4;
    let ratio = half.prefactor / planck.prefactor;
    let ratio_ok = (ratio - 8.0).abs() <= 1e-6;
    outcome(
        pass && prefactor_ok && ratio_ok,
        format!(
            "{}; Planck prefactor {a:.6e}; half-quantum/Planck prefactor ratio {ratio:.9} (finding: 8)",
            parts.join(", ")
        ),
    )
}

fn statistics_oracle() -> Outcome {
    let t = 1000.0;
    let kt = BOLTZMANN * t;
    let mut worst: f64 = 0.0;
    let mut offset_exact = true;
    for i in 0..20 {
        let x = 10f64.powf(-3.0 + (50f64.log10() + 3.0) * i as f64 / 19.0);
        let eps = x * kt;
        let brute = partition_average_energy(eps, t, None, false).unwrap();
        let closed = eps * mean_occupancy(eps, t).unwrap();
        worst = worst.max((brute - closed).abs() / closed);
        let with = partition_average_energy(eps, t, None, true).unwrap();
        offset_exact &= with == brute + 0.5 * eps;
    }
    outcome(
        worst < 1e-12 && offset_exact,
        format!("max relative deviation {worst:.3e} (limit 1e-12); zero-point offset exactly eps/2: {offset_exact}"),
    )
}

fn monte_carlo_equilibrium() -> Outcome {
    let t = 1500.0;
    let hyp = QuantumHypothesis::half_quantum();
    let freqs: Vec<f64> = (0..30)
        .map(|i| {
            let x = 0.1 * 50f64.powf(i as f64 / 29.0);
            2.0 * x * BOLTZMANN * t / PLANCK
        })
        .collect();
    let seed = 0x5eed_2024;
    let (sweeps, burn_in) = (1_000_000, 10_000);
    let mut state = ModeGasState::new(&freqs, t, hyp, seed).unwrap();
    let stats = state.run(sweeps, burn_in).unwrap();
    let mut worst_occ: f64 = 0.0;
    for (i, (m, se)) in stats.mean.iter().zip(&stats.std_error).enumerate() {
        let expect = 1.0 / state.reduced_energy(i).exp_m1();
        worst_occ = worst_occ.max((m - expect).abs() / se);
    }
    let spectrum = spectrum_estimate(&stats, &state).unwrap();
    let mut worst_u: f64 = 0.0;
    for s in &spectrum.samples {
        let exact = SpectralLaw::HalfQuantum.evaluate(s.nu, t).unwrap();
        worst_u = worst_u.max((s.u - exact).abs() / s.u_err.unwrap());
    }
    let mut again = ModeGasState::new(&freqs, t, hyp, seed).unwrap();
    let repeat = again.run(sweeps, burn_in).unwrap();
    let identical = repeat == stats
        && repeat.mean.iter().zip(&stats.mean).all(|(a, b)| a.to_bits() == b.to_bits())
        && again == state;
    outcome(
        worst_occ < 3.0 && worst_u < 3.0 && identical,
        format!(
            "worst occupancy |dev|/SE {worst_occ:.3}, worst spectrum |dev|/sigma {worst_u:.3} (limit 3); bit-identical rerun: {identical}; seed {seed}, {sweeps} sweeps, burn-in {burn_in}"
        ),
    )
}

fn plane_wave_identity() -> Outcome {
    let mut rng = RandomStream::new(6);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let mut c = || Complex64::new(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
        let jones = Jones::new(c(), c());
        let z = 2.0 * rng.uniform() - 1.0;
        let phi = std::f64::consts::TAU * rng.uniform();
        let s = (1.0 - z * z).sqrt();
        let k = [2.0 * s * phi.cos(), 2.0 * s * phi.sin(), 2.0 * z];
        let cfg = FieldConfiguration::from(PlaneWave::new(k, jones, 0.7).unwrap());
        let p = [rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()];
        let (u, g) = energy_momentum_densities(&cfg, p, true).unwrap();
        let gc = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt() * SPEED_OF_LIGHT_CGS;
        worst = worst.max((u - gc).abs() / u);
    }
    outcome(worst < 1e-12, format!("max |u - |g|c| / u = {worst:.3e} over 100 polarizations (limit 1e-12)"))
}

fn multipole_ratio() -> Outcome {
    let omega = 1e10;
    let k = omega / SPEED_OF_LIGHT_CGS;
    let mut worst: f64 = 0.0;
    let mut parts = Vec::new();
    for (l, m) in [(1, 0), (1, 1), (2, 1), (2, 2)] {
        let r = multipole_shell_ratio(l, m, omega, 20.0 / k, 0.1 / k).unwrap();
        worst = worst.max(r.deviation);
        parts.push(format!("({l},{m}) {:.2e} [full u {:.2e}]", r.deviation, r.deviation_full));
    }
    outcome(
        worst < 1e-6,
        format!("|dJz/dU - m/omega| * omega / max(|m|,1): {} (limit 1e-6)", parts.join(", ")),
    )
}

fn tensor_integrals() -> Outcome {
    let sigma = 1.0;
    let packet = CompactWavePacket::new(
        4.0 / sigma,
        sigma,
        [0.5 * sigma, -0.3 * sigma, 0.2 * sigma],
        1.0,
        Jones::new(Complex64::new(0.8, 0.0), Complex64::new(0.0, 0.6)),
    )
    .unwrap();
    let grid = VolumeGrid::cube([0.0; 3], 7.5 * sigma, 0.25 * sigma, 0.01 * sigma, 0.0).unwrap();
    let shifted = Gauge::Shifted(GaugeFunction {
        amplitude: 0.5,
        width: 0.9 * sigma,
        center: [-0.2 * sigma, 0.4 * sigma, 0.1 * sigma],
        k: 3.0 / sigma,
    });
    let mut pass = true;
    let mut parts = Vec::new();
    for gauge in [Gauge::Radiation, shifted] {
        let r = refinement_check(&packet, &gauge, &grid).unwrap();
        let e = r.coarse.energy.relative;
        let l = r.coarse.max_angular_relative();
        pass &= e < 1e-6 && l < 1e-6;
        for ratio in [r.energy_ratio, r.angular_ratio].into_iter().flatten() {
            pass &= ratio >= 8.0;
        }
        pass &= r.angular_ratio.is_some();
        let show = |x: Option<f64>| x.map_or("rounding-level".to_string(), |v| format!("{v:.2}x"));
        parts.push(format!(
            "{} gauge: energy {e:.2e} (refined {}), angular momentum {l:.2e} (refined {}); T^(mu0) reading {:.2e}",
            r.coarse.gauge,
            show(r.energy_ratio),
            show(r.angular_ratio),
            r.coarse.momentum_second_index.iter().map(|p| p.relative).fold(0.0, f64::max),
        ));
    }
    outcome(pass, format!("{} (limits 1e-6, refinement >= 8x)", parts.join("; ")))
}

fn topological_period() -> Outcome {
    let opts = PeriodOptions::default();
    let vortex = Vortex::hbar();
    let mut worst_winding: f64 = 0.0;
    for n in 1..=3 {
        let path = LoopPath::circle([0.0, 0.0, 0.0], 1.0, n).unwrap();
        let r = period_integral(&vortex, &path, &opts).unwrap();
        worst_winding = worst_winding.max((r.value - n as f64 * HBAR).abs() / (n as f64 * HBAR));
    }
    let grad = GradientField(|x: [f64; 3]| [x[1].cos() * 2.0 * x[0], -x[0] * x[0] * x[1].sin() + x[2], x[1]]);
    let mut worst_gradient: f64 = 0.0;
    for path in [
        LoopPath::circle([0.2, 0.1, 0.3], 1.3, 1).unwrap(),
        LoopPath::ellipse([-1.0, 0.4, 0.0], 0.5, 2.5, 2).unwrap(),
    ] {
        let r = period_integral(&grad, &path, &opts).unwrap();
        worst_gradient = worst_gradient.max(r.value.abs() / r.magnitude);
    }
    let beam = BeamModel {
        amplitude: HBAR,
        waist: 1e-3,
    };
    let disk = SurfacePatch::disk([2e-4, -1e-4, 0.0], 1.5e-3).unwrap();
    let flux = flux_integral(
        &Curl {
            field: beam,
            spacing: 1e-6,
        },
        &disk,
        &FluxOptions::default(),
    )
    .unwrap();
    let period = period_integral(&beam, &disk.boundary().unwrap(), &opts).unwrap();
    let stokes = (flux.value - period.value).abs() / period.value.abs();
    outcome(
        worst_winding < 1e-9 && worst_gradient < 1e-12 && stokes < 1e-8,
        format!(
            "winding error {worst_winding:.2e} (limit 1e-9), gradient period {worst_gradient:.2e} of scale (limit 1e-12), Stokes mismatch {stokes:.2e} (limit 1e-8)"
        ),
    )
}

fn energy_split_identities() -> Outcome {
    let mut rng = RandomStream::new(10);
    let mut ok = true;
    for _ in 0..1000 {
        let nu = 10f64.powf(3.0 + 17.0 * rng.uniform());
        let s = energy_split(nu).unwrap();
        let h_nu = photon_energy_exact(nu).unwrap();
        ok &= s.spin_exact == s.translational_exact;
        ok &= s.total_exact.as_ref() == Some(&h_nu);
        let [p, v, l, w] = photon_classical_inputs(nu).unwrap();
        ok &= (p.to_f64() * SPEED_OF_LIGHT / (PLANCK * nu) - 1.0).abs() < 1e-15;
        let c = classical_split(&p, &v, &l, &w).unwrap();
        ok &= c.spin_exact == s.spin_exact && c.translational_exact == s.translational_exact;
    }
    outcome(ok, format!("1000 random frequencies: parts equal, sum = h nu and classical split identical in exact arithmetic: {ok}"))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("pair-law recovery", Duration::from_secs(1), pair_law_recovery),
        ("Rayleigh-Jeans limit", Duration::from_secs(1), rayleigh_jeans_limit),
        ("Stefan-Boltzmann form", Duration::from_secs(5), stefan_boltzmann),
        ("statistics oracle", Duration::from_secs(1), statistics_oracle),
        ("Monte Carlo equilibrium", Duration::from_secs(120), monte_carlo_equilibrium),
        ("plane-wave identity", Duration::from_secs(1), plane_wave_identity),
        ("multipole ratio", Duration::from_secs(30), multipole_ratio),
        ("tensor integral equalities", Duration::from_secs(120), tensor_integrals),
        ("topological period", Duration::from_secs(1), topological_period),
        ("energy split identities", Duration::from_secs(1), energy_split_identities),
    ];
    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *budget;
        let pass = o.pass && in_time;
        if !pass {
            failures += 1;
        }
        println!(
            "{} {:>2} {name}: {} [{:.3} s, budget {} s{}]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_time { "" } else { ", over budget" }
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
