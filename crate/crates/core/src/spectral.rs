//! Closed-form spectral energy densities `u(ν, T)` in J·m⁻³·Hz⁻¹, their
//! totals, peaks and pairwise comparison.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::SpectralConstants;
use crate::error::{Error, Result};
use crate::numerics::{find_maximum, integrate, Domain, Quadrature};

/// Below this reduced frequency `x/(eˣ − 1)` is taken from its series.
const SERIES_CUTOFF: f64 = 1e-6;
/// Values at or below this are treated as underflow by [`compare`].
pub const UNDERFLOW_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralLaw {
    /// `hν · 8πν²/c³ / (e^{hν/kT} − 1)`
    Planck,
    /// `8πν²/c³ · kT`
    RayleighJeans,
    /// `8πν²/c³ · hν e^{−hν/kT}`
    Wien,
    /// Bose counting with `hν/2` per exchanged quantum.
    HalfQuantum,
    /// Spin-correlated photon pairs as the exchanged entity; equals Planck.
    PairPlanck,
    /// Planck plus a zero-point offset of `hν/2` per mode.
    PlanckSecond,
    /// `8πν²/c³ · hν/2`, temperature independent.
    ZeroPoint,
}

impl SpectralLaw {
    pub const ALL: [SpectralLaw; 7] = [
        SpectralLaw::Planck,
        SpectralLaw::RayleighJeans,
        SpectralLaw::Wien,
        SpectralLaw::HalfQuantum,
        SpectralLaw::PairPlanck,
        SpectralLaw::PlanckSecond,
        SpectralLaw::ZeroPoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpectralLaw::Planck => "planck",
            SpectralLaw::RayleighJeans => "rayleigh-jeans",
            SpectralLaw::Wien => "wien",
            SpectralLaw::HalfQuantum => "half-quantum",
            SpectralLaw::PairPlanck => "pair-planck",
            SpectralLaw::PlanckSecond => "planck-second",
            SpectralLaw::ZeroPoint => "zero-point",
        }
    }

    pub fn is_thermal(self) -> bool {
        self != SpectralLaw::ZeroPoint
    }

    pub fn evaluate(self, nu: f64, temperature: f64) -> Result<f64> {
        self.evaluate_with(&SpectralConstants::SI, nu, temperature)
    }

    pub fn evaluate_with(self, c: &SpectralConstants, nu: f64, temperature: f64) -> Result<f64> {
        if !(nu >= 0.0 && nu.is_finite()) {
            return Err(Error::domain(format!("frequency must be finite and >= 0, got {nu}")));
        }
        if self.is_thermal() && !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::domain(format!(
                "{} requires a positive temperature, got {temperature}",
                self.name()
            )));
        }
        let density = mode_density(nu, c.c);
        let kt = c.k * temperature;
        let u = match self {
            SpectralLaw::Planck | SpectralLaw::PairPlanck => {
                density * kt * x_over_expm1(c.h * nu / kt)
            }
            SpectralLaw::HalfQuantum => {
                let h = 0.5 * c.h;
                density * kt * x_over_expm1(h * nu / kt)
            }
            SpectralLaw::Wien => {
                let x = c.h * nu / kt;
                density * kt * (x * (-x).exp())
            }
            SpectralLaw::RayleighJeans => density * kt,
            SpectralLaw::ZeroPoint => density * (0.5 * c.h * nu),
            SpectralLaw::PlanckSecond => {
                density * kt * x_over_expm1(c.h * nu / kt) + density * (0.5 * c.h * nu)
            }
        };
        Ok(u)
    }

    /// Frequency scale over which the law decays by `e`, or `None` when it
    /// does not decay.
    fn decay_frequency(self, c: &SpectralConstants, temperature: f64) -> Option<f64> {
        let base = c.k * temperature / c.h;
        match self {
            SpectralLaw::Planck | SpectralLaw::PairPlanck | SpectralLaw::Wien => Some(base),
            SpectralLaw::HalfQuantum => Some(2.0 * base),
            SpectralLaw::PlanckSecond => Some(base),
            SpectralLaw::RayleighJeans | SpectralLaw::ZeroPoint => None,
        }
    }
}

impl fmt::Display for SpectralLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpectralLaw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpectralLaw::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::argument(format!("unknown law `{s}`")))
    }
}

/// Electromagnetic modes per volume per hertz, two polarizations: `8πν²/c³`.
pub fn mode_density(nu: f64, c: f64) -> f64 {
    8.0 * PI * nu * nu / (c * c * c)
}

/// `x / (eˣ − 1)`, with the removable singularity at zero.
fn x_over_expm1(x: f64) -> f64 {
    if x < SERIES_CUTOFF {
        1.0 - 0.5 * x + x * x / 12.0
    } else {
        let e = (-x).exp();
        x * (e / -(-x).exp_m1())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumSample {
    pub nu: f64,
    pub u: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub law: String,
    pub temperature: f64,
    pub samples: Vec<SpectrumSample>,
}

impl Spectrum {
    pub fn new(law: impl Into<String>, temperature: f64, samples: Vec<SpectrumSample>) -> Result<Self> {
        if samples.windows(2).any(|w| !(w[1].nu > w[0].nu)) {
            return Err(Error::argument("spectrum frequencies must be strictly increasing"));
        }
        if samples.iter().any(|s| !(s.u.is_finite() && s.u >= 0.0)) {
            return Err(Error::domain("spectrum values must be finite and non-negative"));
        }
        Ok(Spectrum {
            law: law.into(),
            temperature,
            samples,
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Tabulate `law` on `grid` at `temperature`.
pub fn spectrum(law: SpectralLaw, temperature: f64, grid: &[f64]) -> Result<Spectrum> {
    let samples = grid
        .iter()
        .map(|&nu| {
            Ok(SpectrumSample {
                nu,
                u: law.evaluate(nu, temperature)?,
                u_err: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Spectrum::new(law.name(), temperature, samples)
}

pub fn linear_grid(min: f64, max: f64, points: usize) -> Result<Vec<f64>> {
    check_grid_args(min, max, points)?;
    match points {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![min]),
        _ => {}
    }
    let step = (max - min) / (points - 1) as f64;
    Ok((0..points)
        .map(|i| if i == points - 1 { max } else { min + i as f64 * step })
        .collect())
}

pub fn log_grid(min: f64, max: f64, points: usize) -> Result<Vec<f64>> {
    check_grid_args(min, max, points)?;
    if !(min > 0.0) {
        return Err(Error::argument("logarithmic grid needs a positive minimum"));
    }
    match points {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![min]),
        _ => {}
    }
    let (a, b) = (min.ln(), max.ln());
    let step = (b - a) / (points - 1) as f64;
    Ok((0..points)
        .map(|i| match i {
            0 => min,
            i if i == points - 1 => max,
            i => (a + i as f64 * step).exp(),
        })
        .collect())
}

fn check_grid_args(min: f64, max: f64, points: usize) -> Result<()> {
    if points == 0 {
        return Ok(());
    }
    if !(min.is_finite() && max.is_finite() && min >= 0.0) {
        return Err(Error::argument("grid bounds must be finite and non-negative"));
    }
    if points > 1 && !(max > min) {
        return Err(Error::argument("grid maximum must exceed its minimum"));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TotalEnergy {
    pub law: SpectralLaw,
    pub temperature: f64,
    /// J·m⁻³; for `PlanckSecond` only the thermal part.
    pub value: f64,
    pub error: f64,
    /// Set when the zero-point part of the law diverges and was left out.
    pub zero_point_divergent: bool,
}

/// `∫₀^∞ u(ν, T) dν`.
pub fn total_energy_density(law: SpectralLaw, temperature: f64) -> Result<TotalEnergy> {
    total_energy_density_with(law, temperature, &Quadrature::default())
}

pub fn total_energy_density_with(
    law: SpectralLaw,
    temperature: f64,
    q: &Quadrature,
) -> Result<TotalEnergy> {
    let c = SpectralConstants::SI;
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::domain(format!("temperature must be positive, got {temperature}")));
    }
    let decay = law
        .decay_frequency(&c, temperature)
        .ok_or(Error::NonIntegrable(law.name()))?;
    let (integrand_law, zero_point_divergent) = match law {
        SpectralLaw::PlanckSecond => (SpectralLaw::Planck, true),
        other => (other, false),
    };
    // Integrate in x = ν / ν_T with the integrand normalized to O(1).
    let nu_t = c.k * temperature / c.h;
    let norm = 8.0 * PI * (c.k * temperature).powi(4) / (c.h * c.c).powi(3);
    let scaled = |x: f64| integrand_law.evaluate_with(&c, x * nu_t, temperature).unwrap_or(f64::NAN) * nu_t / norm;
    let r = integrate(scaled, Domain::ray_scaled(0.0, 2.0 * decay / nu_t), q)?;
    Ok(TotalEnergy {
        law,
        temperature,
        value: r.value * norm,
        error: r.error * norm,
        zero_point_divergent,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeakFrequency {
    pub law: SpectralLaw,
    pub temperature: f64,
    pub nu: f64,
    /// `hν/kT` at the peak.
    pub x: f64,
}

/// Frequency of the spectral maximum.
pub fn peak_frequency(law: SpectralLaw, temperature: f64) -> Result<PeakFrequency> {
    let c = SpectralConstants::SI;
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::domain(format!("temperature must be positive, got {temperature}")));
    }
    if matches!(law, SpectralLaw::RayleighJeans | SpectralLaw::ZeroPoint) {
        return Err(Error::NoInteriorPeak { lo: 0.0, hi: f64::INFINITY });
    }
    let nu_t = c.k * temperature / c.h;
    let norm = mode_density(nu_t, c.c) * c.k * temperature;
    let profile = |x: f64| law.evaluate_with(&c, x * nu_t, temperature).unwrap_or(f64::NAN) / norm;
    let m = find_maximum(profile, 1e-3, 60.0)?;
    Ok(PeakFrequency {
        law,
        temperature,
        nu: m.location * nu_t,
        x: m.location,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `hν/kT < 10⁻²` at the lowest sampled frequency.
    RayleighJeans,
    Intermediate,
    /// `hν/kT > 10` at the lowest sampled frequency.
    Wien,
}

impl Regime {
    pub fn classify(x: f64) -> Regime {
        if x < 1e-2 {
            Regime::RayleighJeans
        } else if x > 10.0 {
            Regime::Wien
        } else {
            Regime::Intermediate
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonSample {
    pub nu: f64,
    pub u_a: f64,
    pub u_b: f64,
    /// `|u_a − u_b| / max(|u_a|, |u_b|)`; absent when either value underflows.
    pub rel_dev: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub law_a: SpectralLaw,
    pub law_b: SpectralLaw,
    pub temperature: f64,
    pub max_rel_dev: f64,
    /// Frequency of the largest deviation, if any sample was comparable.
    pub location: Option<f64>,
    pub compared: usize,
    pub low_frequency_regime: Regime,
    pub x_min: f64,
    pub x_max: f64,
    pub samples: Vec<ComparisonSample>,
}

pub fn compare(a: SpectralLaw, b: SpectralLaw, grid: &[f64], temperature: f64) -> Result<Comparison> {
    if grid.is_empty() {
        return Err(Error::argument("comparison grid is empty"));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::argument("comparison grid must be strictly increasing"));
    }
    let c = SpectralConstants::SI;
    let mut samples = Vec::with_capacity(grid.len());
    let mut max_rel_dev = 0.0;
    let mut location = None;
    let mut compared = 0;
    for &nu in grid {
        let u_a = a.evaluate(nu, temperature)?;
        let u_b = b.evaluate(nu, temperature)?;
        let rel_dev = (u_a.abs() > UNDERFLOW_FLOOR && u_b.abs() > UNDERFLOW_FLOOR)
            .then(|| (u_a - u_b).abs() / u_a.abs().max(u_b.abs()));
        if let Some(d) = rel_dev {
            compared += 1;
            if location.is_none() || d > max_rel_dev {
                max_rel_dev = d;
                location = Some(nu);
            }
        }
        samples.push(ComparisonSample { nu, u_a, u_b, rel_dev });
    }
    let to_x = |nu: f64| c.h * nu / (c.k * temperature);
    let x_min = to_x(grid[0]);
    Ok(Comparison {
        law_a: a,
        law_b: b,
        temperature,
        max_rel_dev,
        location,
        compared,
        low_frequency_regime: Regime::classify(x_min),
        x_min,
        x_max: to_x(grid[grid.len() - 1]),
        samples,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StefanFit {
    pub law: SpectralLaw,
    /// Least-squares slope of `ln(total)` against `ln(T)`.
    pub slope: f64,
    /// `exp(intercept)`, J·m⁻³·K⁻slope.
    pub prefactor: f64,
    pub temperatures: Vec<f64>,
    pub totals: Vec<f64>,
    pub zero_point_divergent: bool,
}

pub fn stefan_fit(law: SpectralLaw, temperatures: &[f64]) -> Result<StefanFit> {
    let mut distinct = temperatures.to_vec();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    if distinct.len() < 3 {
        return Err(Error::argument("a Stefan fit needs at least 3 distinct temperatures"));
    }
    let mut totals = Vec::with_capacity(temperatures.len());
    let mut zero_point_divergent = false;
    for &t in temperatures {
        let e = total_energy_density(law, t)?;
        zero_point_divergent |= e.zero_point_divergent;
        totals.push(e.value);
    }
    let xs: Vec<f64> = temperatures.iter().map(|t| t.ln()).collect();
    let ys: Vec<f64> = totals.iter().map(|u| u.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    Ok(StefanFit {
        law,
        slope,
        prefactor: intercept.exp(),
        temperatures: temperatures.to_vec(),
        totals,
        zero_point_divergent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{BOLTZMANN, PLANCK, SPEED_OF_LIGHT};
    use proptest::prelude::*;

    /// Written-out half-quantum law, kept apart from `evaluate`.
    fn half_quantum_closed_form(nu: f64, t: f64) -> f64 {
        let c3 = SPEED_OF_LIGHT.powi(3);
        (PLANCK * nu / 2.0) * 8.0 * PI * nu * nu / (c3 * (PLANCK * nu / (2.0 * BOLTZMANN * t)).exp_m1())
    }

    #[test]
    fn half_quantum_reference_point() {
        let u = SpectralLaw::HalfQuantum.evaluate(1e14, 5000.0).unwrap();
        // direct evaluation with the same constants: 5.017147362873229e-16
        assert!((u - 5.017_147_362_873_229e-16).abs() / u < 1e-13, "{u:e}");
        assert!((u - half_quantum_closed_form(1e14, 5000.0)).abs() / u < 1e-13);
    }

    #[test]
    fn zero_frequency_vanishes() {
        for law in SpectralLaw::ALL {
            assert_eq!(law.evaluate(0.0, 300.0).unwrap(), 0.0, "{law}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(SpectralLaw::Planck.evaluate(1e12, 0.0).is_err());
        assert!(SpectralLaw::Wien.evaluate(1e12, -1.0).is_err());
        assert!(SpectralLaw::Planck.evaluate(-1.0, 300.0).is_err());
        assert!(SpectralLaw::ZeroPoint.evaluate(1e12, 0.0).is_ok());
    }

    #[test]
    fn names_round_trip() {
        for law in SpectralLaw::ALL {
            assert_eq!(law.name().parse::<SpectralLaw>().unwrap(), law);
        }
        assert!("bogus".parse::<SpectralLaw>().is_err());
    }

    #[test]
    fn planck_total_matches_radiation_constant() {
        let a = SpectralConstants::SI.radiation_constant();
        assert!((a - 7.5657e-16).abs() / a < 1e-4);
        let e = total_energy_density(SpectralLaw::Planck, 1000.0).unwrap();
        assert!((e.value - a * 1e12).abs() / e.value < 1e-9, "{e:?}");
        assert!(!e.zero_point_divergent);
    }

    #[test]
    fn half_quantum_total_is_eight_times_planck() {
        let p = total_energy_density(SpectralLaw::HalfQuantum, 1500.0).unwrap().value;
        let q = total_energy_density(SpectralLaw::Planck, 1500.0).unwrap().value;
        assert!((p / q - 8.0).abs() < 1e-8);
    }

    #[test]
    fn totals_scale_as_t4() {
        for law in [SpectralLaw::Planck, SpectralLaw::HalfQuantum, SpectralLaw::PairPlanck, SpectralLaw::Wien] {
            let a = total_energy_density(law, 700.0).unwrap().value;
            let b = total_energy_density(law, 1400.0).unwrap().value;
            assert!((b / a - 16.0).abs() < 1e-8, "{law}");
        }
    }

    #[test]
    fn divergent_laws_are_flagged() {
        for law in [SpectralLaw::RayleighJeans, SpectralLaw::ZeroPoint] {
            assert_eq!(
                total_energy_density(law, 300.0).unwrap_err(),
                Error::NonIntegrable(law.name())
            );
        }
        let e = total_energy_density(SpectralLaw::PlanckSecond, 300.0).unwrap();
        let p = total_energy_density(SpectralLaw::Planck, 300.0).unwrap();
        assert!(e.zero_point_divergent);
        assert_eq!(e.value, p.value);
    }

    #[test]
    fn peaks() {
        // bisection oracle on 3(1 - e^-x) = x
        let x0 = crate::numerics::bisect(|x: f64| 3.0 * (1.0 - (-x).exp()) - x, 1.0, 5.0).unwrap();
        let p = peak_frequency(SpectralLaw::Planck, 1000.0).unwrap();
        let expect = x0 * BOLTZMANN * 1000.0 / PLANCK;
        assert!((p.nu - expect).abs() / expect < 1e-10);
        assert!((p.nu - 5.879e13).abs() / p.nu < 1e-4);
        let hq = peak_frequency(SpectralLaw::HalfQuantum, 1000.0).unwrap();
        assert!((hq.nu / p.nu - 2.0).abs() < 1e-9);
        let p2 = peak_frequency(SpectralLaw::Wien, 2000.0).unwrap();
        let p1 = peak_frequency(SpectralLaw::Wien, 1000.0).unwrap();
        assert!((p2.nu / p1.nu - 2.0).abs() < 1e-9);
        assert!((p1.x - 3.0).abs() < 1e-9);
        for law in [SpectralLaw::RayleighJeans, SpectralLaw::ZeroPoint, SpectralLaw::PlanckSecond] {
            assert!(matches!(peak_frequency(law, 1000.0), Err(Error::NoInteriorPeak { .. })), "{law}");
        }
    }

    #[test]
    fn compare_self_and_pair() {
        let grid = log_grid(1e9, 1e15, 300).unwrap();
        let c = compare(SpectralLaw::Wien, SpectralLaw::Wien, &grid, 3000.0).unwrap();
        assert_eq!(c.max_rel_dev, 0.0);
        let c = compare(SpectralLaw::PairPlanck, SpectralLaw::Planck, &grid, 3000.0).unwrap();
        assert!(c.max_rel_dev < 1e-12);
        assert_eq!(c.low_frequency_regime, Regime::RayleighJeans);
        assert!(compare(SpectralLaw::Planck, SpectralLaw::Wien, &[], 300.0).is_err());
        assert!(compare(SpectralLaw::Planck, SpectralLaw::Wien, &[2.0, 1.0], 300.0).is_err());
    }

    #[test]
    fn half_quantum_goes_over_to_rayleigh_jeans() {
        let t = 300.0;
        let nu_max = 1e-4 * 2.0 * BOLTZMANN * t / PLANCK;
        let grid = linear_grid(nu_max / 100.0, nu_max, 100).unwrap();
        let c = compare(SpectralLaw::HalfQuantum, SpectralLaw::RayleighJeans, &grid, t).unwrap();
        assert!(c.max_rel_dev < 1e-4);
        assert!((c.max_rel_dev - 0.5e-4).abs() < 1e-8, "{}", c.max_rel_dev);
    }

    #[test]
    fn stefan_fit_slopes() {
        let temps = [500.0, 1000.0, 2000.0, 4000.0];
        let p = stefan_fit(SpectralLaw::Planck, &temps).unwrap();
        assert!((p.slope - 4.0).abs() < 1e-6);
        let h = stefan_fit(SpectralLaw::HalfQuantum, &temps).unwrap();
        assert!((h.prefactor / p.prefactor - 8.0).abs() < 1e-6);
        assert!(stefan_fit(SpectralLaw::Planck, &[1000.0]).is_err());
        assert!(stefan_fit(SpectralLaw::Planck, &[1000.0, 1000.0, 2000.0]).is_err());
        assert!(stefan_fit(SpectralLaw::RayleighJeans, &temps).is_err());
    }

    #[test]
    fn wien_tail_agrees() {
        let t = 100.0;
        for x in [50.0, 60.0, 120.0, 500.0] {
            let nu = x * BOLTZMANN * t / PLANCK;
            let p = SpectralLaw::Planck.evaluate(nu, t).unwrap();
            let w = SpectralLaw::Wien.evaluate(nu, t).unwrap();
            if w > 0.0 {
                assert!((p - w).abs() / w < 1e-20, "x={x}");
            } else {
                assert_eq!(p, 0.0);
            }
        }
    }

    #[test]
    fn spectrum_validation() {
        let s = spectrum(SpectralLaw::Planck, 300.0, &[]).unwrap();
        assert!(s.is_empty());
        assert!(Spectrum::new("x", 1.0, vec![
            SpectrumSample { nu: 2.0, u: 1.0, u_err: None },
            SpectrumSample { nu: 1.0, u: 1.0, u_err: None },
        ]).is_err());
        assert_eq!(linear_grid(1.0, 2.0, 3).unwrap(), vec![1.0, 1.5, 2.0]);
        assert!(log_grid(0.0, 2.0, 3).is_err());
        assert!(log_grid(1.0, 2.0, 0).unwrap().is_empty());
        assert!(linear_grid(1.0, 2.0, 0).unwrap().is_empty());
        assert_eq!(log_grid(3.0, 3.0, 1).unwrap(), vec![3.0]);
    }

    proptest! {
        #[test]
        fn thermal_laws_increase_with_temperature(lnu in 8.0f64..16.0, t in 1.0f64..1e4, f in 1.01f64..3.0) {
            let nu = 10f64.powf(lnu);
            for law in SpectralLaw::ALL.into_iter().filter(|l| l.is_thermal()) {
                let lo = law.evaluate(nu, t).unwrap();
                let hi = law.evaluate(nu, t * f).unwrap();
                prop_assert!(lo >= 0.0);
                // the zero-point offset can swamp the thermal change below one ulp
                if law == SpectralLaw::PlanckSecond {
                    prop_assert!(hi >= lo);
                } else if lo > 1e-290 {
                    prop_assert!(hi > lo, "{} at nu={nu:e} t={t}", law);
                }
            }
        }

        #[test]
        fn half_quantum_is_planck_with_half_h(lnu in 8.0f64..16.0, t in 1.0f64..1e4) {
            let nu = 10f64.powf(lnu);
            let half = SpectralConstants { h: 0.5 * PLANCK, ..SpectralConstants::SI };
            let hq = SpectralLaw::HalfQuantum.evaluate(nu, t).unwrap();
            let p = SpectralLaw::Planck.evaluate_with(&half, nu, t).unwrap();
            prop_assert_eq!(hq, p);
            let cf = half_quantum_closed_form(nu, t);
            if cf > 1e-290 {
                prop_assert!((hq - cf).abs() / cf < 1e-12);
            }
        }

        #[test]
        fn planck_second_minus_planck_is_zero_point(lnu in 8.0f64..16.0, t in 1.0f64..1e4) {
            let nu = 10f64.powf(lnu);
            let s = SpectralLaw::PlanckSecond.evaluate(nu, t).unwrap();
            let p = SpectralLaw::Planck.evaluate(nu, t).unwrap();
            let z = SpectralLaw::ZeroPoint.evaluate(nu, t).unwrap();
            // one rounding of the final sum
            prop_assert!((s - p - z).abs() <= 2.0 * f64::EPSILON * s);
        }

        #[test]
        fn pair_equals_planck(lnu in 8.0f64..16.0, t in 1.0f64..1e4) {
            let nu = 10f64.powf(lnu);
            prop_assert_eq!(
                SpectralLaw::PairPlanck.evaluate(nu, t).unwrap(),
                SpectralLaw::Planck.evaluate(nu, t).unwrap()
            );
        }
    }
}
