//! Angular momentum carried per unit energy by a radiating multipole.

use std::f64::consts::PI;

use serde::Serialize;

use super::config::MagneticMultipole;
use super::vector::*;
use crate::constants::SPEED_OF_LIGHT_CGS;
use crate::error::{Error, Result};
use crate::numerics::gauss_legendre;

/// Polar Gauss-Legendre nodes.
pub const POLAR_NODES: usize = 64;
/// Azimuthal trapezoid nodes.
pub const AZIMUTHAL_NODES: usize = 128;
const RADIAL_NODES: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShellRatio {
    pub l: u32,
    pub m: i32,
    pub omega: f64,
    /// `ωr/c` at the inner radius.
    pub kr: f64,
    /// `∫(r × ⟨g⟩)_z dV` over the shell.
    pub angular_momentum: f64,
    /// `∫|Ẽ|²/8π dV`, the radiation-zone energy.
    pub energy: f64,
    /// `∫⟨u⟩ dV` including the near-zone pieces of `B`.
    pub energy_full: f64,
    /// `dJz/dU` from the radiation-zone energy, s.
    pub ratio: f64,
    pub ratio_full: f64,
    /// `m/ω`
    pub expected: f64,
    /// `|ratio − m/ω| · ω / max(|m|, 1)`
    pub deviation: f64,
    pub deviation_full: f64,
}

/// Shell `r ..= r + dr` integral of the time-averaged z angular momentum
/// density over the energy density for a unit-amplitude magnetic multipole.
pub fn multipole_shell_ratio(l: u32, m: i32, omega: f64, r: f64, dr: f64) -> Result<ShellRatio> {
    let source = MagneticMultipole::new(l, m, omega, 1.0)?;
    let k = source.wavenumber();
    if !(r > 0.0 && k * r >= 10.0) {
        return Err(Error::domain(format!(
            "shell must lie in the radiation zone (omega r / c >= 10), got {}",
            k * r
        )));
    }
    if !(dr > 0.0 && dr.is_finite()) {
        return Err(Error::domain(format!("shell width must be positive, got {dr}")));
    }
    let (mu, wmu) = gauss_legendre(POLAR_NODES);
    let (rad, wrad) = gauss_legendre(RADIAL_NODES);
    let dphi = 2.0 * PI / AZIMUTHAL_NODES as f64;
    let (mut jz, mut u_rad, mut u_full) = (0.0, 0.0, 0.0);
    for (s, ws) in rad.iter().zip(&wrad) {
        let radius = r + 0.5 * dr * (s + 1.0);
        let wr = 0.5 * dr * ws * radius * radius;
        for (c, wc) in mu.iter().zip(&wmu) {
            let sin = (1.0 - c * c).sqrt();
            for p in 0..AZIMUTHAL_NODES {
                let phi = p as f64 * dphi;
                let x = [radius * sin * phi.cos(), radius * sin * phi.sin(), radius * c];
                let (e, b) = source.complex_fields(x);
                let w = wr * wc * dphi;
                let g = scale(re(ccross(e, conj(b))), 1.0 / (8.0 * PI * SPEED_OF_LIGHT_CGS));
                jz += w * cross(x, g)[2];
                u_rad += w * cnorm_sqr(e) / (8.0 * PI);
                u_full += w * (cnorm_sqr(e) + cnorm_sqr(b)) / (16.0 * PI);
            }
        }
    }
    if u_rad == 0.0 || u_full == 0.0 {
        return Err(Error::UndefinedRatio(format!("shell energy vanishes for l={l}, m={m}")));
    }
    let expected = m as f64 / omega;
    let norm = omega / (m.unsigned_abs().max(1) as f64);
    let ratio = jz / u_rad;
    let ratio_full = jz / u_full;
    Ok(ShellRatio {
        l,
        m,
        omega,
        kr: k * r,
        angular_momentum: jz,
        energy: u_rad,
        energy_full: u_full,
        ratio,
        ratio_full,
        expected,
        deviation: (ratio - expected).abs() * norm,
        deviation_full: (ratio_full - expected).abs() * norm,
    })
}
