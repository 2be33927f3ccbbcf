use photon_lab::constants::BOLTZMANN;
use photon_lab::gas::{spectrum_estimate, ModeGasState};
use photon_lab::statistics::compose_law;
use serde_json::json;

use crate::args::McArgs;
use crate::emit::{Check, Report, Table};

pub fn mc(a: &McArgs) -> anyhow::Result<Report> {
    let h = a.hypothesis.resolve()?;
    let per_hz = h.entity_energy(1.0).ok_or_else(|| {
        photon_lab::Error::Unsupported("the Monte Carlo gas needs a quantized entity energy".into())
    })?;
    if a.modes == 0 {
        return Err(crate::UsageError("--modes must be at least 1".into()).into());
    }
    if !(a.x_min > 0.0 && a.x_max >= a.x_min) {
        return Err(crate::UsageError("need 0 < --x-min <= --x-max".into()).into());
    }
    let kt = BOLTZMANN * a.temp;
    let freqs: Vec<f64> = (0..a.modes)
        .map(|i| {
            let f = if a.modes == 1 { 0.0 } else { i as f64 / (a.modes - 1) as f64 };
            a.x_min * (a.x_max / a.x_min).powf(f) * kt / per_hz
        })
        .collect();
    let mut state = ModeGasState::new(&freqs, a.temp, h, a.seed)?;
    let stats = state.run(a.sweeps, a.burn_in)?;
    let spectrum = spectrum_estimate(&stats, &state)?;
    let law = compose_law(h);

    let mut t = Table::new(&[
        "mode",
        "nu_hz",
        "reduced_energy",
        "mean_occupancy",
        "std_error",
        "expected_occupancy",
        "occupancy_z",
        "u_j_per_m3_hz",
        "u_err_j_per_m3_hz",
        "u_expected_j_per_m3_hz",
        "u_z",
    ]);
    let mut checks = Vec::new();
    let mut modes = Vec::new();
    for (i, s) in spectrum.samples.iter().enumerate() {
        let x = state.reduced_energy(i);
        let expected = 1.0 / x.exp_m1();
        let (mean, se) = (stats.mean[i], stats.std_error[i]);
        let z = (mean - expected).abs() / se;
        let u_expected = law.evaluate(s.nu, a.temp)?;
        let u_err = s.u_err.unwrap_or(f64::NAN);
        let uz = (s.u - u_expected).abs() / u_err;
        checks.push(Check::at_most(format!("mode {i} occupancy"), mean, z, a.sigmas));
        checks.push(Check::at_most(format!("mode {i} spectral density"), s.u, uz, a.sigmas));
        t.push(vec![
            i.into(),
            s.nu.into(),
            x.into(),
            mean.into(),
            se.into(),
            expected.into(),
            z.into(),
            s.u.into(),
            u_err.into(),
            u_expected.into(),
            uz.into(),
        ]);
        modes.push(json!({
            "mode": i,
            "nu": s.nu,
            "reduced_energy": x,
            "mean_occupancy": mean,
            "std_error": se,
            "expected_occupancy": expected,
            "u": s.u,
            "u_err": u_err,
            "u_expected": u_expected,
        }));
    }
    let body = json!({
        "hypothesis": h,
        "label": h.label(),
        "temperature": a.temp,
        "sweeps": stats.sweeps,
        "burn_in": stats.burn_in,
        "samples": stats.samples,
        "batches": stats.batches,
        "seed": stats.seed,
        "generator": stats.generator,
        "modes": modes,
    });
    let mut r = Report::new(body)?.with_table(t).with_checks(checks);
    r.seed = Some(stats.seed);
    r.generator = Some(stats.generator);
    Ok(r)
}
