//! Bose-Einstein occupancy, mode counting, and composition of a spectral law
//! from a quantum hypothesis.
//!
//! A composed law is assembled as `mode density × entity energy × mean
//! occupancy`, independently of the closed forms in [`crate::spectral`].

use std::f64::consts::PI;

use serde::Serialize;

use crate::constants::{BOLTZMANN, PLANCK, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::numerics::CompensatedSum;
use crate::spectral::SpectralLaw;

const SERIES_CUTOFF: f64 = 1e-6;
/// Largest relative share the dropped tail of a partition sum may carry.
const TAIL_TOLERANCE: f64 = 1e-14;

/// Energy carried by one exchanged entity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntityEnergy {
    /// `hν`
    FullQuantum,
    /// `hν/2`: the translational share of a photon with momentum `hν/c`.
    HalfQuantum,
    /// Classical limit: `kT` per mode, no quantization.
    Equipartition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuantumHypothesis {
    pub entity_energy: EntityEnergy,
    /// 1 for single photons, 2 for spin-correlated pairs.
    pub photons_per_entity: u8,
    /// Internal states per entity: 2 for a photon, 1 for a spin-zero pair.
    pub polarization_factor: u8,
}

impl QuantumHypothesis {
    pub fn new(entity_energy: EntityEnergy, photons_per_entity: u8, polarization_factor: u8) -> Result<Self> {
        if !(1..=2).contains(&photons_per_entity) {
            return Err(Error::argument(format!(
                "photons per entity must be 1 or 2, got {photons_per_entity}"
            )));
        }
        if !(1..=2).contains(&polarization_factor) {
            return Err(Error::argument(format!(
                "polarization factor must be 1 or 2, got {polarization_factor}"
            )));
        }
        Ok(QuantumHypothesis {
            entity_energy,
            photons_per_entity,
            polarization_factor,
        })
    }

    /// Bose's single photons with energy `hν`.
    pub const fn single_photon() -> Self {
        QuantumHypothesis {
            entity_energy: EntityEnergy::FullQuantum,
            photons_per_entity: 1,
            polarization_factor: 2,
        }
    }

    /// Single photons exchanging only their translational energy `hν/2`.
    pub const fn half_quantum() -> Self {
        QuantumHypothesis {
            entity_energy: EntityEnergy::HalfQuantum,
            photons_per_entity: 1,
            polarization_factor: 2,
        }
    }

    /// Spin-zero photon pairs with energy `hν` per pair; the mode factor 2
    /// counts the two photons of opposite spin.
    pub const fn photon_pair() -> Self {
        QuantumHypothesis {
            entity_energy: EntityEnergy::FullQuantum,
            photons_per_entity: 2,
            polarization_factor: 1,
        }
    }

    pub const fn equipartition() -> Self {
        QuantumHypothesis {
            entity_energy: EntityEnergy::Equipartition,
            photons_per_entity: 1,
            polarization_factor: 2,
        }
    }

    /// Energy per entity at frequency `nu`, J; `None` in the classical limit.
    pub fn entity_energy(&self, nu: f64) -> Option<f64> {
        match self.entity_energy {
            EntityEnergy::FullQuantum => Some(PLANCK * nu),
            EntityEnergy::HalfQuantum => Some(0.5 * PLANCK * nu),
            EntityEnergy::Equipartition => None,
        }
    }

    pub fn mode_density(&self) -> ModeDensity {
        ModeDensity {
            multiplicity: self.polarization_factor * self.photons_per_entity,
        }
    }

    pub fn label(&self) -> String {
        let energy = match self.entity_energy {
            EntityEnergy::FullQuantum => "h-nu",
            EntityEnergy::HalfQuantum => "half-h-nu",
            EntityEnergy::Equipartition => "equipartition",
        };
        format!(
            "{energy}/photons-{}/polarization-{}",
            self.photons_per_entity, self.polarization_factor
        )
    }
}

/// Modes per volume per hertz, `multiplicity · 4πν²/c³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModeDensity {
    pub multiplicity: u8,
}

impl ModeDensity {
    pub fn density(&self, nu: f64) -> f64 {
        self.multiplicity as f64 * 4.0 * PI * nu * nu / SPEED_OF_LIGHT.powi(3)
    }
}

/// Mean quantum number `1/(e^{ε/kT} − 1)` of a mode.
pub fn mean_occupancy(energy: f64, temperature: f64) -> Result<f64> {
    if !(energy > 0.0 && energy.is_finite()) {
        return Err(Error::domain(format!("quantum energy must be positive, got {energy}")));
    }
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::domain(format!("temperature must be positive, got {temperature}")));
    }
    Ok(occupancy(energy / (BOLTZMANN * temperature)))
}

/// `1/(eˣ − 1)` for `x > 0`.
pub(crate) fn occupancy(x: f64) -> f64 {
    if x < SERIES_CUTOFF {
        1.0 / x - 0.5 + x / 12.0
    } else {
        (-x).exp() / -(-x).exp_m1()
    }
}

/// Default truncation for [`partition_average_energy`]: `⌈50 kT/ε⌉ + 100`.
pub fn default_truncation(reduced_energy: f64) -> usize {
    (50.0 / reduced_energy).ceil() as usize + 100
}

/// Relative tail weights beyond `n_max` for the partition sum and for the
/// energy-weighted sum.
fn tail_fractions(x: f64, n_max: usize) -> (f64, f64) {
    let n = n_max as f64;
    let z_tail = (-(n + 1.0) * x).exp();
    let e_tail = (-n * x).exp() * ((n + 1.0) - n * (-x).exp());
    (z_tail, e_tail)
}

fn required_truncation(x: f64) -> usize {
    let ok = |n: usize| {
        let (z, e) = tail_fractions(x, n);
        z <= TAIL_TOLERANCE && e <= TAIL_TOLERANCE
    };
    let mut hi = 1usize;
    while !ok(hi) {
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Brute-force thermal mean energy of a quantized oscillator,
/// `Σ nε e^{−nε/kT} / Σ e^{−nε/kT}` over `n = 0..=truncation`, plus `ε/2`
/// when `zero_point_offset` is set.
pub fn partition_average_energy(
    energy: f64,
    temperature: f64,
    truncation: Option<usize>,
    zero_point_offset: bool,
) -> Result<f64> {
    if !(energy > 0.0 && energy.is_finite()) {
        return Err(Error::domain(format!("quantum energy must be positive, got {energy}")));
    }
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::domain(format!("temperature must be positive, got {temperature}")));
    }
    let x = energy / (BOLTZMANN * temperature);
    let n_max = truncation.unwrap_or_else(|| default_truncation(x));
    let (z_tail, e_tail) = tail_fractions(x, n_max);
    if z_tail > TAIL_TOLERANCE || e_tail > TAIL_TOLERANCE {
        return Err(Error::TailTooLarge {
            given: n_max,
            required: required_truncation(x),
        });
    }
    let mut z = CompensatedSum::default();
    let mut weighted = CompensatedSum::default();
    for n in 0..=n_max {
        let w = (-(n as f64) * x).exp();
        if w == 0.0 {
            break;
        }
        z.add(w);
        weighted.add(n as f64 * w);
    }
    let mean = energy * (weighted.value() / z.value());
    Ok(if zero_point_offset { mean + 0.5 * energy } else { mean })
}

/// A spectral law built from a quantum hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComposedLaw {
    pub hypothesis: QuantumHypothesis,
}

impl ComposedLaw {
    /// `u(ν, T)` in J·m⁻³·Hz⁻¹.
    pub fn evaluate(&self, nu: f64, temperature: f64) -> Result<f64> {
        if !(nu >= 0.0 && nu.is_finite()) {
            return Err(Error::domain(format!("frequency must be finite and >= 0, got {nu}")));
        }
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::domain(format!("temperature must be positive, got {temperature}")));
        }
        let density = self.hypothesis.mode_density().density(nu);
        if nu == 0.0 {
            return Ok(0.0);
        }
        Ok(match self.hypothesis.entity_energy(nu) {
            Some(eps) => density * eps * mean_occupancy(eps, temperature)?,
            None => density * BOLTZMANN * temperature,
        })
    }

    /// The closed-form law this composition reproduces, if it is one of them.
    pub fn named(&self) -> Option<SpectralLaw> {
        let h = self.hypothesis;
        if h.mode_density().multiplicity != 2 {
            return None;
        }
        match (h.entity_energy, h.photons_per_entity) {
            (EntityEnergy::FullQuantum, 1) => Some(SpectralLaw::Planck),
            (EntityEnergy::FullQuantum, 2) => Some(SpectralLaw::PairPlanck),
            (EntityEnergy::HalfQuantum, 1) => Some(SpectralLaw::HalfQuantum),
            (EntityEnergy::Equipartition, _) => Some(SpectralLaw::RayleighJeans),
            _ => None,
        }
    }
}

pub fn compose_law(hypothesis: QuantumHypothesis) -> ComposedLaw {
    ComposedLaw { hypothesis }
}
