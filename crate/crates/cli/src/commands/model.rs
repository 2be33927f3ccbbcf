use photon_lab::constants::{HBAR, PLANCK, SPEED_OF_LIGHT};
use photon_lab::em::Vec3;
use photon_lab::model::ensemble::{boost_closed_form, total_four_momentum};
use photon_lab::model::{
    energy_split, ensemble_angular_tensor, flux_integral, period_integral, photon_energy_exact, BeamModel, Curl,
    FluxOptions, GradientField, LoopPath, Particle, ParticleEnsemble, PeriodOptions, SurfacePatch, VectorField,
    Vortex,
};
use photon_lab::numerics::RandomStream;
use serde::Deserialize;
use serde_json::json;

use crate::args::{EnsembleArgs, FluxArgs, OneForm, PeriodArgs, SplitArgs};
use crate::emit::{Check, Report, Table};

const BEAM: BeamModel = BeamModel {
    amplitude: HBAR,
    waist: 1.0,
};

fn gradient(x: Vec3) -> Vec3 {
    [x[1].cos() * 2.0 * x[0], -x[0] * x[0] * x[1].sin() + x[2], x[1]]
}

fn one_form(f: OneForm) -> Box<dyn VectorField> {
    match f {
        OneForm::Vortex => Box::new(Vortex::hbar()),
        OneForm::Gradient => Box::new(GradientField(gradient)),
        OneForm::Beam => Box::new(BEAM),
    }
}

pub fn split(a: &SplitArgs) -> anyhow::Result<Report> {
    let mut t = Table::new(&[
        "nu_hz",
        "spin_j",
        "translational_j",
        "total_j",
        "spin_exact",
        "translational_exact",
        "total_exact",
        "parts_equal",
    ]);
    let mut checks = Vec::new();
    let mut splits = Vec::new();
    for &nu in &a.nu {
        let s = energy_split(nu)?;
        let h_nu = photon_energy_exact(nu)?;
        let sums = s.total_exact.as_ref() == Some(&h_nu);
        let flag = |ok: bool| if ok { 0.0 } else { 1.0 };
        checks.push(Check::at_most(format!("nu={nu:e} spin = translational"), s.spin, flag(s.parts_equal), 0.0));
        checks.push(Check::at_most(format!("nu={nu:e} spin + translational = h nu"), s.total, flag(sums), 0.0));
        t.push(vec![
            nu.into(),
            s.spin.into(),
            s.translational.into(),
            s.total.into(),
            s.spin_exact.to_string().into(),
            s.translational_exact.to_string().into(),
            s.total_exact.as_ref().map_or(String::new(), ToString::to_string).into(),
            s.parts_equal.into(),
        ]);
        splits.push(json!({ "nu": nu, "split": s, "h_nu_exact": h_nu, "h_nu": PLANCK * nu }));
    }
    Ok(Report::new(json!({ "splits": splits }))?.with_table(t).with_checks(checks))
}

pub fn period(a: &PeriodArgs) -> anyhow::Result<Report> {
    let path = LoopPath::ellipse([a.cx, a.cy, 0.0], a.a, a.b, a.windings)?;
    let field = one_form(a.field);
    let opts = PeriodOptions {
        guard: a.guard,
        max_panels: a.max_panels,
        ..PeriodOptions::default()
    };
    let r = period_integral(field.as_ref(), &path, &opts)?;
    let (expected, tol) = match a.field {
        OneForm::Vortex => {
            let inside = (a.cx / a.a).powi(2) + (a.cy / a.b).powi(2) < 1.0;
            (Some(if inside { a.windings as f64 * HBAR } else { 0.0 }), 1e-9)
        }
        OneForm::Gradient => (Some(0.0), 1e-12),
        OneForm::Beam if a.cx == 0.0 && a.cy == 0.0 && a.a == a.b => {
            let q = (a.a / BEAM.waist).powi(2);
            (Some(a.windings as f64 * 2.0 * std::f64::consts::PI * BEAM.amplitude * q * (-q).exp()), 1e-9)
        }
        OneForm::Beam => (None, 0.0),
    };
    let mut checks = Vec::new();
    if let Some(e) = expected {
        let scale = if e != 0.0 { e.abs() } else { r.magnitude };
        let residual = if scale > 0.0 { (r.value - e).abs() / scale } else { r.value.abs() };
        checks.push(Check::at_most("period integral", r.value, residual, tol));
    }
    let mut t = Table::new(&["field", "loop", "value", "expected", "error", "magnitude", "panels", "closest_approach"]);
    t.push(vec![
        field_name(a.field).into(),
        path.label().into(),
        r.value.into(),
        expected.into(),
        r.error.into(),
        r.magnitude.into(),
        r.panels.into(),
        r.closest_approach.into(),
    ]);
    let body = json!({
        "field": field_name(a.field),
        "loop": path.label(),
        "period": r,
        "expected": expected,
    });
    Ok(Report::new(body)?.with_table(t).with_checks(checks))
}

fn field_name(f: OneForm) -> &'static str {
    match f {
        OneForm::Vortex => "vortex",
        OneForm::Gradient => "gradient",
        OneForm::Beam => "beam",
    }
}

pub fn flux(a: &FluxArgs) -> anyhow::Result<Report> {
    let disk = SurfacePatch::disk([a.cx, a.cy, 0.0], a.radius)?;
    let boundary = disk.boundary()?;
    let field = one_form(a.field);
    let spacing = 1e-3 * BEAM.waist;
    let period = period_integral(field.as_ref(), &boundary, &PeriodOptions::default())?;
    let opts = FluxOptions {
        abs_tol: 1e-12 * period.magnitude,
        ..FluxOptions::default()
    };
    let flux = match a.field {
        OneForm::Vortex => {
            return Err(photon_lab::Error::Unsupported(
                "the vortex curl is concentrated on its axis; use `model period` instead".into(),
            )
            .into())
        }
        OneForm::Gradient => flux_integral(&Curl { field: GradientField(gradient), spacing }, &disk, &opts)?,
        OneForm::Beam => flux_integral(&Curl { field: BEAM, spacing }, &disk, &opts)?,
    };
    let residual = (flux.value - period.value).abs() / period.magnitude;
    let checks = vec![Check::at_most("Stokes consistency", flux.value, residual, a.tolerance)];
    let mut t = Table::new(&["field", "surface", "flux", "period", "residual"]);
    t.push(vec![
        field_name(a.field).into(),
        disk.label().into(),
        flux.value.into(),
        period.value.into(),
        residual.into(),
    ]);
    let body = json!({
        "field": field_name(a.field),
        "surface": disk.label(),
        "flux": flux,
        "period": period,
    });
    Ok(Report::new(body)?.with_table(t).with_checks(checks))
}

#[derive(Debug, Deserialize)]
struct EnsembleFile {
    #[serde(default)]
    time: f64,
    particles: Vec<ParticleSpec>,
}

#[derive(Debug, Deserialize)]
struct ParticleSpec {
    position: Vec3,
    momentum: Vec3,
    energy: Option<f64>,
    mass: Option<f64>,
}

impl ParticleSpec {
    fn build(&self) -> Particle {
        match (self.energy, self.mass) {
            (Some(energy), mass) => Particle {
                position: self.position,
                momentum: self.momentum,
                energy,
                mass,
            },
            (None, Some(m)) => Particle::massive(self.position, self.momentum, m),
            (None, None) => Particle::photon(self.position, self.momentum),
        }
    }
}

fn random_photons(n: usize, seed: u64) -> ParticleEnsemble {
    let mut rng = RandomStream::new(seed);
    let particles = (0..n)
        .map(|_| {
            let mut u = || 2.0 * rng.uniform() - 1.0;
            let position = [u(), u(), u()];
            let z = u();
            let phi = std::f64::consts::PI * u();
            let s = (1.0 - z * z).sqrt();
            let nu = 1e14 * 10f64.powf(0.5 * (u() + 1.0));
            let p = PLANCK * nu / SPEED_OF_LIGHT;
            Particle::photon(position, [p * s * phi.cos(), p * s * phi.sin(), p * z])
        })
        .collect();
    ParticleEnsemble::new(particles, 0.0)
}

fn max_abs(m: &[[f64; 4]; 4]) -> f64 {
    m.iter().flatten().fold(0.0, |a, x| a.max(x.abs()))
}

pub fn ensemble(a: &EnsembleArgs) -> anyhow::Result<Report> {
    let (ens, seed) = match &a.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            let file: EnsembleFile = serde_json::from_str(&text)
                .map_err(|e| crate::UsageError(format!("{}: {e}", path.display())))?;
            let particles = file.particles.iter().map(ParticleSpec::build).collect();
            (ParticleEnsemble::new(particles, file.time), None)
        }
        None => (random_photons(a.random, a.seed), Some(a.seed)),
    };
    let m0 = ensemble_angular_tensor(&ens)?;
    let scale0 = max_abs(&m0.components);
    let mut checks = Vec::new();
    let mut snapshots = Vec::new();
    for &dt in &a.times {
        let e = ens.advance(dt);
        let m = ensemble_angular_tensor(&e)?;
        let scale = max_abs(&m.components).max(scale0);
        let drift = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| (m.components[i][j] - m0.components[i][j]).abs())
            .fold(0.0, f64::max);
        let closed = boost_closed_form(&e);
        let boost_err = (0..3).map(|i| (closed[i] - m.boost[i]).abs()).fold(0.0, f64::max);
        let rel = |x: f64| if scale > 0.0 { x / scale } else { x };
        checks.push(Check::at_most(format!("t={dt:e} s tensor conserved"), scale, rel(drift), 1e-9));
        checks.push(Check::at_most(format!("t={dt:e} s boost closed form"), scale, rel(boost_err), 1e-12));
        snapshots.push(json!({
            "time": e.time,
            "tensor": m,
            "four_momentum": total_four_momentum(&e),
        }));
    }
    let body = json!({
        "particles": ens.particles.len(),
        "initial_time": ens.time,
        "snapshots": snapshots,
    });
    let mut r = Report::new(body)?.with_checks(checks);
    if let Some(s) = seed {
        r.seed = Some(s);
        r.generator = Some(photon_lab::GENERATOR_NAME);
    }
    Ok(r)
}
