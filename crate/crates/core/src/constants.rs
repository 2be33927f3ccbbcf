//! Physical constants.
//!
//! SI values are the exact or recommended CODATA 2018 values. The Gaussian
//! (CGS) speed of light is used by the electromagnetic module.

use std::f64::consts::PI;

/// Identifier embedded in run manifests.
pub const CONSTANT_SET: &str = "CODATA-2018";

/// Planck constant, J·s (exact).
pub const PLANCK: f64 = 6.626_070_15e-34;
/// Reduced Planck constant, J·s.
pub const HBAR: f64 = PLANCK / (2.0 * PI);
/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Speed of light in vacuum, cm/s.
pub const SPEED_OF_LIGHT_CGS: f64 = 2.997_924_58e10;
/// Fine-structure constant (CODATA 2018 recommended value).
pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;

/// The constant triple a spectral law is evaluated with.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SpectralConstants {
    pub h: f64,
    pub k: f64,
    pub c: f64,
}

impl SpectralConstants {
    pub const SI: SpectralConstants = SpectralConstants {
        h: PLANCK,
        k: BOLTZMANN,
        c: SPEED_OF_LIGHT,
    };

    /// Radiation constant `8 π⁵ k⁴ / (15 c³ h³)` in J·m⁻³·K⁻⁴.
    pub fn radiation_constant(&self) -> f64 {
        8.0 * PI.powi(5) * self.k.powi(4) / (15.0 * self.c.powi(3) * self.h.powi(3))
    }
}

impl Default for SpectralConstants {
    fn default() -> Self {
        Self::SI
    }
}
