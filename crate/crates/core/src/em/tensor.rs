//! Energy-momentum and angular-momentum tensors built from numerically
//! differentiated potentials. Signature `(+,−,−,−)`.

use std::f64::consts::PI;

use serde::Serialize;

use super::config::{FieldConfiguration, Gauge};
use super::vector::*;
use crate::constants::SPEED_OF_LIGHT_CGS;
use crate::error::{Error, Result};
use crate::numerics::{partial_derivatives, Grid4};

pub const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

pub type Matrix4 = [[f64; 4]; 4];
pub type Rank3 = [[[f64; 4]; 4]; 4];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TensorAtPoint {
    pub point: [f64; 4],
    /// Canonical `T^{μν}`; the first index carries the conserved current.
    pub canonical: Matrix4,
    /// Symmetric `E^{μν}`.
    pub symmetric: Matrix4,
    /// Spin tensor `t^{μν} = (1/4π) F^{μλ} ∂_λ A^ν`.
    pub spin: Matrix4,
    /// `t_{μν} = ∂^λA_μ F_{νλ}` exactly as printed, lower indices.
    pub spin_literal: Matrix4,
    pub u: f64,
    pub g: Vec3,
    pub e: Vec3,
    pub b: Vec3,
    /// `M^{μνλ} = T^{μν}x^λ − T^{μλ}x^ν`.
    pub canonical_angular: Rank3,
    /// `A^{λμν} = x^λE^{μν} − x^μE^{λν}`.
    pub symmetric_angular: Rank3,
}

fn max_abs(m: &Matrix4) -> f64 {
    m.iter().flatten().fold(0.0, |a, &x| a.max(x.abs()))
}

impl TensorAtPoint {
    /// Largest `|E^{μν}|`, the reference for every residual.
    pub fn scale(&self) -> f64 {
        max_abs(&self.symmetric)
    }

    pub fn symmetry_residual(&self) -> f64 {
        let s = &self.symmetric;
        let mut r: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                r = r.max((s[mu][nu] - s[nu][mu]).abs());
            }
        }
        r
    }

    /// `|η_{μν} E^{μν}|`
    pub fn trace_residual(&self) -> f64 {
        (0..4).map(|mu| ETA[mu] * self.symmetric[mu][mu]).sum::<f64>().abs()
    }

    /// `max |E − (T + t)|`
    pub fn decomposition_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                let d = self.symmetric[mu][nu] - self.canonical[mu][nu] - self.spin[mu][nu];
                r = r.max(d.abs());
            }
        }
        r
    }

    /// Same as [`Self::decomposition_residual`] with the literal spin tensor
    /// raised to upper indices in place of `t`.
    pub fn literal_decomposition_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                let t = ETA[mu] * ETA[nu] * self.spin_literal[mu][nu];
                let d = self.symmetric[mu][nu] - self.canonical[mu][nu] - t;
                r = r.max(d.abs());
            }
        }
        r
    }
}

/// `d[μ][ν] = ∂_μ A_ν` (both lower) from finite differences.
pub fn potential_gradient(config: &FieldConfiguration, gauge: &Gauge, point: [f64; 4], fd: &Grid4) -> Matrix4 {
    partial_derivatives(
        |p| {
            let a = config.potential_in(gauge, p);
            [a[0], -a[1], -a[2], -a[3]]
        },
        point,
        fd,
    )
}

/// `F_{μν}` from the potential gradient.
pub fn field_tensor(d: &Matrix4) -> Matrix4 {
    std::array::from_fn(|mu| std::array::from_fn(|nu| d[mu][nu] - d[nu][mu]))
}

/// `(E, B)` read off a lower-index `F_{μν}`.
pub fn fields_from_tensor(f: &Matrix4) -> (Vec3, Vec3) {
    let e = [f[0][1], f[0][2], f[0][3]];
    let b = [-f[2][3], -f[3][1], -f[1][2]];
    (e, b)
}

/// `(E, B)` from finite differences of the potentials.
pub fn fields_from_potentials(config: &FieldConfiguration, gauge: &Gauge, point: [f64; 4], fd: &Grid4) -> (Vec3, Vec3) {
    fields_from_tensor(&field_tensor(&potential_gradient(config, gauge, point, fd)))
}

/// Closed-form `(E, B)` at `point = [ct, x, y, z]`.
pub fn fields_at(config: &FieldConfiguration, point: [f64; 4]) -> (Vec3, Vec3) {
    config.fields(point)
}

/// `(u, g)` from `u = (E² + B²)/8π`, `g = E × B/4πc`; the time-averaged form
/// uses complex amplitudes, `⟨u⟩ = (|Ẽ|² + |B̃|²)/16π`,
/// `⟨g⟩ = Re(Ẽ × B̃*)/8πc`.
pub fn energy_momentum_densities(config: &FieldConfiguration, point: [f64; 4], time_averaged: bool) -> Result<(f64, Vec3)> {
    if time_averaged {
        let (e, b) = config.complex_fields([point[1], point[2], point[3]]).ok_or_else(|| {
            Error::Unsupported(format!("{} is not monochromatic; no time average", config.name()))
        })?;
        let u = (cnorm_sqr(e) + cnorm_sqr(b)) / (16.0 * PI);
        let g = scale(re(ccross(e, conj(b))), 1.0 / (8.0 * PI * SPEED_OF_LIGHT_CGS));
        Ok((u, g))
    } else {
        let (e, b) = config.fields(point);
        Ok(densities(e, b))
    }
}

pub fn densities(e: Vec3, b: Vec3) -> (f64, Vec3) {
    let u = (dot(e, e) + dot(b, b)) / (8.0 * PI);
    let g = scale(cross(e, b), 1.0 / (4.0 * PI * SPEED_OF_LIGHT_CGS));
    (u, g)
}

/// Every tensor at `point` from the potentials of `config` in `gauge`,
/// differentiated with the stencil spacing of `fd`.
pub fn tensors_at(config: &FieldConfiguration, gauge: &Gauge, point: [f64; 4], fd: &Grid4) -> TensorAtPoint {
    let d = potential_gradient(config, gauge, point, fd);
    tensors_from_gradient(point, &d)
}

pub(crate) fn tensors_from_gradient(point: [f64; 4], d: &Matrix4) -> TensorAtPoint {
    let f_lo = field_tensor(d);
    let f_up: Matrix4 = std::array::from_fn(|m| std::array::from_fn(|n| ETA[m] * ETA[n] * f_lo[m][n]));
    let ff: f64 = (0..4).flat_map(|m| (0..4).map(move |n| (m, n))).map(|(m, n)| f_lo[m][n] * f_up[m][n]).sum();
    let four_pi = 4.0 * PI;
    let canonical: Matrix4 = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let s: f64 = (0..4).map(|l| f_up[mu][l] * ETA[nu] * d[nu][l]).sum();
            let diag = if mu == nu { ETA[mu] * ff / (4.0 * four_pi) } else { 0.0 };
            -s / four_pi + diag
        })
    });
    let spin: Matrix4 = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| (0..4).map(|l| f_up[mu][l] * d[l][nu] * ETA[nu]).sum::<f64>() / four_pi)
    });
    let symmetric: Matrix4 = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let s: f64 = (0..4).map(|l| f_up[mu][l] * f_lo[l][nu] * ETA[nu]).sum();
            let diag = if mu == nu { ETA[mu] * ff / 4.0 } else { 0.0 };
            (s + diag) / four_pi
        })
    });
    let spin_literal: Matrix4 = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| (0..4).map(|l| ETA[l] * d[l][mu] * f_lo[nu][l]).sum())
    });
    let (e, b) = fields_from_tensor(&f_lo);
    let (u, g) = densities(e, b);
    let x = point;
    let canonical_angular: Rank3 = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| std::array::from_fn(|la| canonical[mu][nu] * x[la] - canonical[mu][la] * x[nu]))
    });
    let symmetric_angular: Rank3 = std::array::from_fn(|la| {
        std::array::from_fn(|mu| std::array::from_fn(|nu| x[la] * symmetric[mu][nu] - x[mu] * symmetric[la][nu]))
    });
    TensorAtPoint {
        point,
        canonical,
        symmetric,
        spin,
        spin_literal,
        u,
        g,
        e,
        b,
        canonical_angular,
        symmetric_angular,
    }
}
