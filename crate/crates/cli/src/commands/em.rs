use num_complex::Complex64;
use photon_lab::constants::SPEED_OF_LIGHT_CGS;
use photon_lab::em::vector::{cnorm_sqr, cscale, dot, norm, scale};
use photon_lab::em::{
    energy_momentum_densities, fields_at, multipole_shell_ratio, photon_kinematics, refinement_check,
    tensors_at, CVec3, CompactWavePacket, FieldConfiguration, Gauge, GaugeFunction, Jones, MagneticMultipole,
    PlaneWave, Vec3, VolumeGrid,
};
use photon_lab::numerics::{derivative, laplacian, Grid4, RandomStream};
use serde_json::json;

use crate::args::{FieldsCheckArgs, MultipoleArgs, TensorCheckArgs};
use crate::emit::{Check, Report, Table};

/// Finite-difference spacing for pointwise field checks, in units where k ~ 3.
const FD_STEP: f64 = 1e-3;

fn random_jones(rng: &mut RandomStream) -> Jones {
    let mut c = || Complex64::new(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    Jones::new(c(), c())
}

fn random_direction(rng: &mut RandomStream) -> Vec3 {
    let z = 2.0 * rng.uniform() - 1.0;
    let phi = std::f64::consts::TAU * rng.uniform();
    let s = (1.0 - z * z).sqrt();
    [s * phi.cos(), s * phi.sin(), z]
}

fn random_point(rng: &mut RandomStream, radius: f64) -> [f64; 4] {
    let d = random_direction(rng);
    let r = radius * (0.3 + 0.7 * rng.uniform());
    [rng.uniform(), r * d[0], r * d[1], r * d[2]]
}

fn random_plane(rng: &mut RandomStream) -> anyhow::Result<PlaneWave> {
    let k = scale(random_direction(rng), 3.0);
    Ok(PlaneWave::new(k, random_jones(rng), 1.3)?)
}

fn packet(k_sigma: f64) -> anyhow::Result<CompactWavePacket> {
    Ok(CompactWavePacket::new(
        k_sigma,
        1.0,
        [0.5, -0.3, 0.2],
        1.0,
        Jones::new(Complex64::new(0.8, 0.0), Complex64::new(0.0, 0.6)),
    )?)
}

fn divergence(f: impl Fn([f64; 4]) -> Vec3, p: [f64; 4]) -> f64 {
    (0..3)
        .map(|axis| {
            derivative(
                |s| {
                    let mut q = p;
                    q[axis + 1] = s;
                    f(q)[axis]
                },
                p[axis + 1],
                FD_STEP,
            )
        })
        .sum()
}

fn curl(f: impl Fn(Vec3) -> CVec3, x: Vec3) -> CVec3 {
    let d = |axis: usize, comp: usize| {
        derivative(
            |s| {
                let mut p = x;
                p[axis] = s;
                f(p)[comp]
            },
            x[axis],
            FD_STEP,
        )
    };
    [d(1, 2) - d(2, 1), d(2, 0) - d(0, 2), d(0, 1) - d(1, 0)]
}

struct Worst {
    residual: f64,
    value: f64,
}

impl Worst {
    fn new() -> Self {
        Worst {
            residual: f64::NEG_INFINITY,
            value: 0.0,
        }
    }

    fn see(&mut self, residual: f64, value: f64) {
        if !(residual <= self.residual) {
            self.residual = residual;
            self.value = value;
        }
    }
}

pub fn fields_check(a: &FieldsCheckArgs) -> anyhow::Result<Report> {
    let mut rng = RandomStream::new(a.seed);
    let n = a.samples.max(1);
    let mut checks = Vec::new();

    let mut identity = Worst::new();
    let mut transverse = Worst::new();
    for _ in 0..n {
        let w = random_plane(&mut rng)?;
        let cfg = FieldConfiguration::from(w);
        let p = random_point(&mut rng, 5.0);
        let (u, g) = energy_momentum_densities(&cfg, p, true)?;
        let gc = norm(g) * SPEED_OF_LIGHT_CGS;
        identity.see((u - gc).abs() / u, u);
        let (e, b) = fields_at(&cfg, p);
        let s = norm(e).max(norm(b)) * norm(w.k);
        transverse.see(dot(e, w.k).abs().max(dot(b, w.k).abs()) / s, s);
    }
    checks.push(Check::at_most("plane wave time-averaged u = |g|c", identity.value, identity.residual, a.tolerance));
    checks.push(Check::at_most("plane wave transversality", transverse.value, transverse.residual, 1e-12));

    let omega = 3.0 * SPEED_OF_LIGHT_CGS;
    let configs: Vec<(String, FieldConfiguration, f64, f64)> = vec![
        ("plane wave".into(), random_plane(&mut rng)?.into(), 5.0, 3.0),
        ("multipole (1,1)".into(), MagneticMultipole::new(1, 1, omega, 1.0)?.into(), 5.0, 3.0),
        ("multipole (2,0)".into(), MagneticMultipole::new(2, 0, omega, 1.0)?.into(), 5.0, 3.0),
        ("wave packet".into(), packet(4.0)?.into(), 2.0, 4.0),
    ];
    for (name, cfg, radius, k) in &configs {
        let pts: Vec<_> = (0..n).map(|_| random_point(&mut rng, *radius)).collect();
        let emax = pts.iter().map(|&p| norm(fields_at(cfg, p).0)).fold(0.0, f64::max);
        let bmax = pts.iter().map(|&p| norm(fields_at(cfg, p).1)).fold(0.0, f64::max);
        let (mut db, mut de) = (Worst::new(), Worst::new());
        for &p in &pts {
            let div_b = divergence(|q| fields_at(cfg, q).1, p);
            let div_e = divergence(|q| fields_at(cfg, q).0, p);
            db.see(div_b.abs() / (k * bmax), div_b);
            de.see(div_e.abs() / (k * emax), div_e);
        }
        checks.push(Check::at_most(format!("{name} div B"), db.value, db.residual, 1e-6));
        checks.push(Check::at_most(format!("{name} div E"), de.value, de.residual, 1e-6));
    }

    for (l, m) in [(1, 0), (1, 1), (2, -1), (2, 2)] {
        let src = MagneticMultipole::new(l, m, omega, 1.0)?;
        let k = src.wavenumber();
        let (mut faraday, mut wave) = (Worst::new(), Worst::new());
        for _ in 0..n.min(20) {
            let p = random_point(&mut rng, 4.0);
            let x = [p[1], p[2], p[3]];
            let (e, b) = src.complex_fields(x);
            let c = cscale(curl(|y| src.complex_fields(y).0, x), Complex64::new(0.0, -1.0 / k));
            let bn = cnorm_sqr(b).sqrt();
            let err = (0..3).map(|i| (c[i] - b[i]).norm()).fold(0.0, f64::max);
            faraday.see(err / bn, bn);
            let k2 = k * k;
            for (v, field) in [(e, 0usize), (b, 1)] {
                let vn = cnorm_sqr(v).sqrt();
                for i in 0..3 {
                    let lap = laplacian(
                        |y| {
                            let f = src.complex_fields(y);
                            if field == 0 { f.0[i] } else { f.1[i] }
                        },
                        x,
                        FD_STEP,
                    );
                    wave.see((lap + v[i] * k2).norm() / (vn * k2), vn);
                }
            }
        }
        checks.push(Check::at_most(format!("multipole ({l},{m}) B = -(i/k) curl E"), faraday.value, faraday.residual, 1e-8));
        checks.push(Check::at_most(format!("multipole ({l},{m}) Helmholtz equation"), wave.value, wave.residual, 1e-6));
    }

    let mut kin = Worst::new();
    for _ in 0..n {
        let nu = 10f64.powf(9.0 + 9.0 * rng.uniform());
        let kk = photon_kinematics(nu, random_direction(&mut rng))?;
        kin.see(kk.residual, kk.energy);
    }
    checks.push(Check::at_most("photon |p|c = h nu", kin.value, kin.residual, 4.0 * f64::EPSILON));

    let body = json!({ "samples": n, "seed": a.seed });
    let table = Table::of_checks(&checks);
    let mut r = Report::new(body)?.with_table(table).with_checks(checks);
    r.seed = Some(a.seed);
    r.generator = Some(photon_lab::GENERATOR_NAME);
    Ok(r)
}

pub fn tensor_check(a: &TensorCheckArgs) -> anyhow::Result<Report> {
    let mut rng = RandomStream::new(a.seed);
    let mut checks = Vec::new();
    let fd = Grid4::uniform(FD_STEP)?;
    let (mut sym, mut trace, mut dec, mut spin) = (Worst::new(), Worst::new(), Worst::new(), Worst::new());
    for _ in 0..30 {
        let cfg = FieldConfiguration::from(random_plane(&mut rng)?);
        let p = random_point(&mut rng, 5.0);
        let t = tensors_at(&cfg, &Gauge::Radiation, p, &fd);
        let s = t.scale();
        sym.see(t.symmetry_residual() / s, s);
        trace.see(t.trace_residual() / s, s);
        dec.see(t.decomposition_residual() / s, s);
        spin.see(t.literal_decomposition_residual() / s, s);
    }
    checks.push(Check::at_most("plane wave E symmetric", sym.value, sym.residual, 1e-10));
    checks.push(Check::at_most("plane wave E traceless", trace.value, trace.residual, 1e-10));
    checks.push(Check::at_most("plane wave E = T + t", dec.value, dec.residual, 1e-8));
    checks.push(Check::at_most("plane wave E = T + t (literal spin tensor)", spin.value, spin.residual, 1e-8));

    let p = packet(a.k_sigma)?;
    let grid = VolumeGrid::cube([0.0; 3], a.half_width, a.step, a.fd_spacing, 0.0)?;
    let shifted = Gauge::Shifted(GaugeFunction {
        amplitude: 0.5,
        width: 0.9,
        center: [-0.2, 0.4, 0.1],
        k: 3.0,
    });
    let mut reports = Vec::new();
    for gauge in [Gauge::Radiation, shifted] {
        let r = refinement_check(&p, &gauge, &grid)?;
        let g = r.coarse.gauge;
        let c = &r.coarse;
        checks.push(Check::at_most(format!("{g} gauge energy integral"), c.energy.symmetric, c.energy.relative, a.tolerance));
        checks.push(Check::at_most(
            format!("{g} gauge momentum integral"),
            c.momentum.iter().map(|m| m.symmetric.abs()).fold(0.0, f64::max),
            c.max_momentum_relative(),
            a.tolerance,
        ));
        checks.push(Check::at_most(
            format!("{g} gauge angular momentum integral"),
            c.angular.iter().map(|m| m.symmetric.abs()).fold(0.0, f64::max),
            c.max_angular_relative(),
            a.tolerance,
        ));
        for (what, ratio) in [("energy", r.energy_ratio), ("momentum", r.momentum_ratio), ("angular momentum", r.angular_ratio)] {
            if let Some(ratio) = ratio {
                checks.push(Check::at_least(format!("{g} gauge {what} refinement"), ratio, ratio, a.min_refinement));
            }
        }
        reports.push(r);
    }
    let body = json!({
        "packet": p,
        "grid": {
            "half_width": a.half_width,
            "step": a.step,
            "fd_spacing": a.fd_spacing,
        },
        "refinement": reports,
    });
    let table = Table::of_checks(&checks);
    let mut r = Report::new(body)?.with_table(table).with_checks(checks);
    r.seed = Some(a.seed);
    r.generator = Some(photon_lab::GENERATOR_NAME);
    Ok(r)
}

fn parse_mode(s: &str) -> anyhow::Result<(u32, i32)> {
    let (l, m) = s
        .split_once(':')
        .ok_or_else(|| crate::UsageError(format!("multipole mode `{s}` is not of the form l:m")))?;
    let l = l.trim().parse().map_err(|_| crate::UsageError(format!("bad l in `{s}`")))?;
    let m = m.trim().parse().map_err(|_| crate::UsageError(format!("bad m in `{s}`")))?;
    Ok((l, m))
}

pub fn multipole_ratio(a: &MultipoleArgs) -> anyhow::Result<Report> {
    let k = a.omega / SPEED_OF_LIGHT_CGS;
    let modes = a.modes.iter().map(|s| parse_mode(s)).collect::<anyhow::Result<Vec<_>>>()?;
    let mut t = Table::new(&["l", "m", "kr", "ratio_s", "expected_s", "deviation", "ratio_full_s", "deviation_full"]);
    let mut checks = Vec::new();
    let mut results = Vec::new();
    for (l, m) in modes {
        let r = multipole_shell_ratio(l, m, a.omega, a.kr / k, a.kdr / k)?;
        t.push(vec![
            (l as u64).into(),
            (m as i64).into(),
            r.kr.into(),
            r.ratio.into(),
            r.expected.into(),
            r.deviation.into(),
            r.ratio_full.into(),
            r.deviation_full.into(),
        ]);
        checks.push(Check::at_most(format!("multipole ({l},{m}) dJz/dU = m/omega"), r.ratio, r.deviation, a.tolerance));
        results.push(r);
    }
    let body = json!({ "omega": a.omega, "modes": results });
    Ok(Report::new(body)?.with_table(t).with_checks(checks))
}
