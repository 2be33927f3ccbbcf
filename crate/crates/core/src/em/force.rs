//! Lorentz force with the charge squared factored out, and photon kinematics.

use std::f64::consts::PI;

use serde::Serialize;

use super::vector::*;
use crate::constants::{HBAR, PLANCK, SPEED_OF_LIGHT, SPEED_OF_LIGHT_CGS};
use crate::error::{Error, Result};

/// A vector quantity in units of `e²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChargeSquared(pub Vec3);

impl ChargeSquared {
    /// Numerical value for a given `e²`.
    pub fn times(&self, e_squared: f64) -> Vec3 {
        scale(self.0, e_squared)
    }
}

/// `e²[E + v × B/c]` in Gaussian units, `v` in cm/s.
pub fn lorentz_force(e: Vec3, b: Vec3, v: Vec3) -> Result<ChargeSquared> {
    let speed = norm(v);
    if !(speed <= SPEED_OF_LIGHT_CGS) {
        return Err(Error::domain(format!("speed {speed:e} cm/s exceeds c")));
    }
    Ok(ChargeSquared(add(e, scale(cross(v, b), 1.0 / SPEED_OF_LIGHT_CGS))))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhotonKinematics {
    /// Hz
    pub nu: f64,
    /// `hν`, J
    pub energy: f64,
    /// `ℏk`, kg·m/s
    pub momentum: Vec3,
    /// `|p|c`, J
    pub momentum_energy: f64,
    /// `| |p|c − hν | / hν`
    pub residual: f64,
}

/// Momentum `ℏk` of a photon of frequency `nu` travelling along `direction`.
pub fn photon_kinematics(nu: f64, direction: Vec3) -> Result<PhotonKinematics> {
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(Error::domain(format!("frequency must be positive, got {nu}")));
    }
    if !(norm(direction) > 0.0) {
        return Err(Error::domain("direction must be non-zero"));
    }
    let k = 2.0 * PI * nu / SPEED_OF_LIGHT;
    let momentum = scale(unit(direction), HBAR * k);
    let energy = PLANCK * nu;
    let momentum_energy = norm(momentum) * SPEED_OF_LIGHT;
    Ok(PhotonKinematics {
        nu,
        energy,
        momentum,
        momentum_energy,
        residual: (momentum_energy - energy).abs() / energy,
    })
}
