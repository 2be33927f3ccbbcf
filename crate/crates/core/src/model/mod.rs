//! Photon constructs: the energy split, one-form period and flux integrals,
//! generalized momentum and ensemble angular-momentum tensors.

pub mod ensemble;
pub mod exact;
pub mod geometry;

use serde::Serialize;

use crate::constants::{FINE_STRUCTURE, HBAR, PLANCK, SPEED_OF_LIGHT};
use crate::em::vector::{norm, scale, sub, unit, Vec3};
use crate::error::{Error, Result};

pub use ensemble::{ensemble_angular_tensor, AngularTensor, Particle, ParticleEnsemble};
pub use exact::PiRational;
pub use geometry::{
    flux_integral, period_integral, BeamModel, Curl, FluxIntegral, FluxOptions, GradientField, LoopPath, PeriodIntegral,
    PeriodOptions, SurfacePatch, UniformField, VectorField, Vortex,
};

/// Exact Planck constant, `6.62607015 × 10⁻³⁴` J·s.
pub fn planck_exact() -> PiRational {
    PiRational::decimal(662_607_015, 42)
}

/// `ℏ = h/2π`
pub fn hbar_exact() -> PiRational {
    &planck_exact().half() / &PiRational::pi()
}

pub fn speed_of_light_exact() -> PiRational {
    PiRational::integer(299_792_458)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhotonState {
    /// Hz
    pub nu: f64,
    pub direction: Vec3,
    pub helicity: i8,
}

impl PhotonState {
    pub fn new(nu: f64, direction: Vec3, helicity: i8) -> Result<Self> {
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(Error::domain(format!("frequency must be positive, got {nu}")));
        }
        if helicity != 1 && helicity != -1 {
            return Err(Error::domain(format!("helicity must be +1 or -1, got {helicity}")));
        }
        let n = norm(direction);
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::domain("direction must be a finite non-zero vector"));
        }
        let direction = if (n - 1.0).abs() <= 1e-12 { direction } else { unit(direction) };
        Ok(PhotonState { nu, direction, helicity })
    }

    pub fn energy(&self) -> f64 {
        PLANCK * self.nu
    }

    /// `ℏk`
    pub fn momentum(&self) -> Vec3 {
        scale(self.direction, HBAR * 2.0 * std::f64::consts::PI * self.nu / SPEED_OF_LIGHT)
    }

    /// `σℏk̂`
    pub fn spin(&self) -> Vec3 {
        scale(self.direction, self.helicity as f64 * HBAR)
    }

    pub fn energy_split(&self) -> Result<EnergySplit> {
        energy_split(self.nu)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergySplit {
    /// J
    pub spin: f64,
    /// J
    pub translational: f64,
    pub total: f64,
    pub spin_exact: PiRational,
    pub translational_exact: PiRational,
    /// `None` when the parts carry different powers of π.
    pub total_exact: Option<PiRational>,
    pub parts_equal: bool,
}

impl EnergySplit {
    fn from_exact(spin: PiRational, translational: PiRational) -> Self {
        let total_exact = spin.checked_add(&translational);
        EnergySplit {
            spin: spin.to_f64(),
            translational: translational.to_f64(),
            total: total_exact
                .as_ref()
                .map_or(spin.to_f64() + translational.to_f64(), PiRational::to_f64),
            parts_equal: spin == translational,
            spin_exact: spin,
            translational_exact: translational,
            total_exact,
        }
    }
}

/// `(ℏω/2, hν/2)` with `ω = 2πν`, in exact arithmetic.
pub fn energy_split(nu: f64) -> Result<EnergySplit> {
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(Error::domain(format!("frequency must be positive, got {nu}")));
    }
    let nu = PiRational::from_f64(nu)?;
    let omega = &(&PiRational::integer(2) * &PiRational::pi()) * &nu;
    let spin = (&hbar_exact() * &omega).half();
    let translational = (&planck_exact() * &nu).half();
    Ok(EnergySplit::from_exact(spin, translational))
}

/// `hν` exactly.
pub fn photon_energy_exact(nu: f64) -> Result<PiRational> {
    Ok(&planck_exact() * &PiRational::from_f64(nu)?)
}

/// Kinetic `pv/2` and rotational `Lω/2`, exactly.
pub fn classical_split(p: &PiRational, v: &PiRational, l: &PiRational, omega: &PiRational) -> Result<EnergySplit> {
    if [p, v, l, omega].iter().any(|x| x.is_negative()) {
        return Err(Error::domain("momentum, speed, angular momentum and frequency must be >= 0"));
    }
    let kinetic = (p * v).half();
    let rotational = (l * omega).half();
    Ok(EnergySplit::from_exact(rotational, kinetic))
}

/// Floating-point entry to [`classical_split`].
pub fn classical_split_f64(p: f64, v: f64, l: f64, omega: f64) -> Result<EnergySplit> {
    classical_split(
        &PiRational::from_f64(p)?,
        &PiRational::from_f64(v)?,
        &PiRational::from_f64(l)?,
        &PiRational::from_f64(omega)?,
    )
}

/// Photon inputs to [`classical_split`]: `p = hν/c`, `v = c`, `L = ℏ`,
/// `ω = 2πν`.
pub fn photon_classical_inputs(nu: f64) -> Result<[PiRational; 4]> {
    let nu = PiRational::from_f64(nu)?;
    let c = speed_of_light_exact();
    let p = &(&planck_exact() * &nu) / &c;
    let omega = &(&PiRational::integer(2) * &PiRational::pi()) * &nu;
    Ok([p, c, hbar_exact(), omega])
}

/// `p − αa` with the published fine-structure constant.
pub fn generalized_momentum(p: Vec3, a: Vec3) -> Vec3 {
    sub(p, scale(a, FINE_STRUCTURE))
}
