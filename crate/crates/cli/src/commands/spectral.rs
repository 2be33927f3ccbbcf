use photon_lab::constants::{BOLTZMANN, PLANCK};
use photon_lab::spectral::{self, compare, linear_grid, log_grid, peak_frequency, stefan_fit, SpectralLaw};
use photon_lab::statistics::compose_law;
use serde_json::json;

use crate::args::{CompareArgs, ComposeArgs, GridKind, PeakArgs, SpectrumArgs, StefanArgs};
use crate::emit::{Report, Table};

fn grid(kind: GridKind, min: f64, max: f64, points: usize) -> photon_lab::Result<Vec<f64>> {
    match kind {
        GridKind::Log => log_grid(min, max, points),
        GridKind::Linear => linear_grid(min, max, points),
    }
}

pub fn spectrum(a: &SpectrumArgs) -> anyhow::Result<Report> {
    let law = SpectralLaw::from(a.law);
    let s = spectral::spectrum(law, a.temp, &grid(a.grid, a.nu_min, a.nu_max, a.points)?)?;
    let mut t = Table::new(&["nu_hz", "u_j_per_m3_hz"]);
    for p in &s.samples {
        t.push(vec![p.nu.into(), p.u.into()]);
    }
    Ok(Report::new(&s)?.with_table(t))
}

pub fn compare_laws(a: &CompareArgs) -> anyhow::Result<Report> {
    let nu_t = BOLTZMANN * a.temp / PLANCK;
    let g = log_grid(a.x_min * nu_t, a.x_max * nu_t, a.points)?;
    let c = compare(a.law_a.into(), a.law_b.into(), &g, a.temp)?;
    let mut t = Table::new(&["nu_hz", "u_a_j_per_m3_hz", "u_b_j_per_m3_hz", "rel_dev"]);
    for s in &c.samples {
        t.push(vec![s.nu.into(), s.u_a.into(), s.u_b.into(), s.rel_dev.into()]);
    }
    Ok(Report::new(&c)?.with_table(t))
}

pub fn stefan(a: &StefanArgs) -> anyhow::Result<Report> {
    let law = SpectralLaw::from(a.law);
    let fit = stefan_fit(law, &a.temps)?;
    let planck = if law == SpectralLaw::Planck {
        fit.clone()
    } else {
        stefan_fit(SpectralLaw::Planck, &a.temps)?
    };
    let mut t = Table::new(&["temperature_k", "u_j_per_m3"]);
    for (temp, u) in fit.temperatures.iter().zip(&fit.totals) {
        t.push(vec![(*temp).into(), (*u).into()]);
    }
    let mut r = Report::new(&fit)?.with_table(t);
    r.body.insert("planck_prefactor".into(), json!(planck.prefactor));
    r.body.insert("prefactor_ratio_vs_planck".into(), json!(fit.prefactor / planck.prefactor));
    Ok(r)
}

pub fn peak(a: &PeakArgs) -> anyhow::Result<Report> {
    let p = peak_frequency(a.law.into(), a.temp)?;
    let mut t = Table::new(&["nu_hz", "x", "nu_over_t_hz_per_k"]);
    t.push(vec![p.nu.into(), p.x.into(), (p.nu / a.temp).into()]);
    let mut r = Report::new(p)?.with_table(t);
    r.body.insert("nu_over_t".into(), json!(p.nu / a.temp));
    Ok(r)
}

pub fn compose(a: &ComposeArgs) -> anyhow::Result<Report> {
    let h = a.hypothesis.resolve()?;
    let law = compose_law(h);
    let named = law.named();
    let g = log_grid(a.nu_min, a.nu_max, a.points)?;
    let mut t = Table::new(&["nu_hz", "u_j_per_m3_hz", "u_named_j_per_m3_hz", "rel_dev"]);
    let mut max_rel_dev: Option<f64> = None;
    for &nu in &g {
        let u = law.evaluate(nu, a.temp)?;
        let (u_named, dev) = match named {
            Some(n) => {
                let v = n.evaluate(nu, a.temp)?;
                let scale = u.abs().max(v.abs());
                let d = if scale > 0.0 { (u - v).abs() / scale } else { 0.0 };
                max_rel_dev = Some(max_rel_dev.map_or(d, |m| m.max(d)));
                (Some(v), Some(d))
            }
            None => (None, None),
        };
        t.push(vec![nu.into(), u.into(), u_named.into(), dev.into()]);
    }
    let body = json!({
        "hypothesis": h,
        "label": h.label(),
        "multiplicity": h.mode_density().multiplicity,
        "named_law": named,
        "temperature": a.temp,
        "max_rel_dev_vs_named": max_rel_dev,
        "points": g.len(),
    });
    Ok(Report::new(body)?.with_table(t))
}
