//! Volume integrals of the energy-momentum and angular-momentum densities of
//! a compact packet.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::config::{CompactWavePacket, FieldConfiguration, Gauge};
use super::tensor::{potential_gradient, tensors_from_gradient};
use crate::error::{Error, Result};
use crate::numerics::Grid4;

/// Largest boundary-to-peak potential ratio accepted.
pub const SUPPORT_THRESHOLD: f64 = 1e-16;
/// Relative residuals below this are rounding noise; no refinement ratio is
/// formed from them.
pub const ROUNDING_FLOOR: f64 = 1e-13;

/// Integration box and node step plus the finite-difference stencil.
///
/// The box is `fd.lower[1..] ..= fd.upper[1..]` at time `x⁰ = fd.lower[0]`;
/// trapezoid nodes sit `step` apart and each node's derivatives use
/// `fd.spacing`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeGrid {
    pub fd: Grid4,
    pub step: f64,
}

impl VolumeGrid {
    pub fn new(fd: Grid4, step: f64) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::argument("node step must be positive"));
        }
        if (1..4).any(|i| !(fd.lower[i].is_finite() && fd.upper[i].is_finite() && fd.upper[i] > fd.lower[i])) {
            return Err(Error::argument("integration box must be finite with positive extent"));
        }
        Ok(VolumeGrid { fd, step })
    }

    /// A cube `center ± half_width` at time `x0`.
    pub fn cube(center: [f64; 3], half_width: f64, step: f64, fd_spacing: f64, x0: f64) -> Result<Self> {
        let lower = [x0, center[0] - half_width, center[1] - half_width, center[2] - half_width];
        let upper = [x0, center[0] + half_width, center[1] + half_width, center[2] + half_width];
        Self::new(Grid4::new([fd_spacing; 4], lower, upper)?, step)
    }

    /// Same nodes, half the stencil spacing.
    pub fn halved(&self) -> Self {
        VolumeGrid {
            fd: self.fd.halved(),
            step: self.step,
        }
    }

    fn axis(&self, i: usize) -> (usize, f64) {
        let len = self.fd.upper[i + 1] - self.fd.lower[i + 1];
        let n = (len / self.step).round().max(2.0) as usize + 1;
        (n, len / (n - 1) as f64)
    }

    fn node(&self, i: usize, k: usize) -> f64 {
        let (_, h) = self.axis(i);
        self.fd.lower[i + 1] + k as f64 * h
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegralPair {
    pub symmetric: f64,
    pub canonical: f64,
    pub difference: f64,
    /// `|difference|` over the group scale.
    pub relative: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolumeReport {
    pub gauge: &'static str,
    pub x0: f64,
    pub nodes: [usize; 3],
    pub fd_spacing: f64,
    /// `∫E^{00}` vs `∫T^{00}`
    pub energy: IntegralPair,
    /// `∫E^{i0}` vs `∫T^{0i}`
    pub momentum: [IntegralPair; 3],
    /// `∫E^{i0}` vs `∫T^{i0}`, second index as the current.
    pub momentum_second_index: [IntegralPair; 3],
    /// `∫(x^iE^{j0} − x^jE^{i0})` vs the canonical orbital plus spin part,
    /// for `(i, j)` = `(y, z)`, `(z, x)`, `(x, y)`.
    pub angular: [IntegralPair; 3],
    /// `∫t^{0μ} dV`
    pub divergence_terms: [f64; 4],
    /// `−(1/4π)∮(E·n)A^μ dS`, the surface form of the divergence terms.
    pub boundary_flux: [f64; 4],
    pub boundary_ratio: f64,
    /// Largest pointwise `|E − (T + t)|` over the local tensor scale.
    pub decomposition_residual: f64,
    /// As above with the literal spin tensor.
    pub literal_decomposition_residual: f64,
}

impl VolumeReport {
    pub fn max_momentum_relative(&self) -> f64 {
        self.momentum.iter().fold(0.0, |a, p| a.max(p.relative))
    }

    pub fn max_angular_relative(&self) -> f64 {
        self.angular.iter().fold(0.0, |a, p| a.max(p.relative))
    }
}

fn pair_group<const N: usize>(sym: [f64; N], can: [f64; N]) -> [IntegralPair; N] {
    let scale = sym
        .iter()
        .chain(can.iter())
        .fold(0.0f64, |a, x| a.max(x.abs()));
    std::array::from_fn(|i| {
        let difference = sym[i] - can[i];
        IntegralPair {
            symmetric: sym[i],
            canonical: can[i],
            difference,
            relative: if scale > 0.0 { difference.abs() / scale } else { 0.0 },
        }
    })
}

#[derive(Default, Clone, Copy)]
struct Sums {
    sym: [f64; 4],
    can_first: [f64; 4],
    can_second: [f64; 4],
    spin: [f64; 4],
    ang_sym: [f64; 3],
    ang_can: [f64; 3],
    decomposition: f64,
    literal: f64,
}

impl Sums {
    fn merge(mut self, o: &Sums) -> Sums {
        for i in 0..4 {
            self.sym[i] += o.sym[i];
            self.can_first[i] += o.can_first[i];
            self.can_second[i] += o.can_second[i];
            self.spin[i] += o.spin[i];
        }
        for i in 0..3 {
            self.ang_sym[i] += o.ang_sym[i];
            self.ang_can[i] += o.ang_can[i];
        }
        self.decomposition = self.decomposition.max(o.decomposition);
        self.literal = self.literal.max(o.literal);
        self
    }
}

fn trapezoid_weight(k: usize, n: usize, h: f64) -> f64 {
    if k == 0 || k + 1 == n {
        0.5 * h
    } else {
        h
    }
}

fn support_ratio(config: &FieldConfiguration, gauge: &Gauge, grid: &VolumeGrid) -> f64 {
    let (nx, _) = grid.axis(0);
    let (ny, _) = grid.axis(1);
    let (nz, _) = grid.axis(2);
    let x0 = grid.fd.lower[0];
    let (peak, edge) = (0..nx)
        .into_par_iter()
        .map(|i| {
            let mut peak = 0.0f64;
            let mut edge = 0.0f64;
            for j in 0..ny {
                for k in 0..nz {
                    let p = [x0, grid.node(0, i), grid.node(1, j), grid.node(2, k)];
                    let a = config.potential_in(gauge, p);
                    let m = a.iter().fold(0.0f64, |s, x| s.max(x.abs()));
                    peak = peak.max(m);
                    if i == 0 || j == 0 || k == 0 || i + 1 == nx || j + 1 == ny || k + 1 == nz {
                        edge = edge.max(m);
                    }
                }
            }
            (peak, edge)
        })
        .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
    if peak > 0.0 {
        edge / peak
    } else {
        0.0
    }
}

fn boundary_flux(config: &FieldConfiguration, gauge: &Gauge, grid: &VolumeGrid) -> [f64; 4] {
    let x0 = grid.fd.lower[0];
    let mut flux = [0.0; 4];
    for axis in 0..3 {
        let (a, b) = ((axis + 1) % 3, (axis + 2) % 3);
        let (na, ha) = grid.axis(a);
        let (nb, hb) = grid.axis(b);
        for (side, sign) in [(grid.fd.lower[axis + 1], -1.0), (grid.fd.upper[axis + 1], 1.0)] {
            for i in 0..na {
                for j in 0..nb {
                    let mut x = [0.0; 3];
                    x[axis] = side;
                    x[a] = grid.node(a, i);
                    x[b] = grid.node(b, j);
                    let p = [x0, x[0], x[1], x[2]];
                    let (e, _) = config.fields(p);
                    let pot = config.potential_in(gauge, p);
                    let w = trapezoid_weight(i, na, ha) * trapezoid_weight(j, nb, hb);
                    for mu in 0..4 {
                        flux[mu] -= w * sign * e[axis] * pot[mu] / (4.0 * PI);
                    }
                }
            }
        }
    }
    flux
}

/// Integrates `E^{μ0}`, `T^{0μ}`, `T^{μ0}`, `t^{0μ}` and the two angular
/// momentum densities over the box of `grid` in the given gauge.
pub fn volume_integral_checks(packet: &CompactWavePacket, gauge: &Gauge, grid: &VolumeGrid) -> Result<VolumeReport> {
    let config = FieldConfiguration::from(*packet);
    let ratio = support_ratio(&config, gauge, grid);
    if ratio > SUPPORT_THRESHOLD {
        return Err(Error::SupportExceedsGrid {
            ratio,
            threshold: SUPPORT_THRESHOLD,
        });
    }
    let (nx, hx) = grid.axis(0);
    let (ny, hy) = grid.axis(1);
    let (nz, hz) = grid.axis(2);
    let x0 = grid.fd.lower[0];
    let slices: Vec<Sums> = (0..nx)
        .into_par_iter()
        .map(|i| {
            let mut s = Sums::default();
            let wx = trapezoid_weight(i, nx, hx);
            for j in 0..ny {
                let wy = trapezoid_weight(j, ny, hy);
                for k in 0..nz {
                    let w = wx * wy * trapezoid_weight(k, nz, hz);
                    let p = [x0, grid.node(0, i), grid.node(1, j), grid.node(2, k)];
                    let d = potential_gradient(&config, gauge, p, &grid.fd);
                    let t = tensors_from_gradient(p, &d);
                    let a = config.potential_in(gauge, p);
                    for mu in 0..4 {
                        s.sym[mu] += w * t.symmetric[mu][0];
                        s.can_first[mu] += w * t.canonical[0][mu];
                        s.can_second[mu] += w * t.canonical[mu][0];
                        s.spin[mu] += w * t.spin[0][mu];
                    }
                    for (c, (a_i, a_j)) in [(2usize, 3usize), (3, 1), (1, 2)].into_iter().enumerate() {
                        let (xi, xj) = (p[a_i], p[a_j]);
                        s.ang_sym[c] += w * (xi * t.symmetric[a_j][0] - xj * t.symmetric[a_i][0]);
                        let orbital = xi * t.canonical[0][a_j] - xj * t.canonical[0][a_i];
                        let spin = (t.e[a_i - 1] * a[a_j] - t.e[a_j - 1] * a[a_i]) / (4.0 * PI);
                        s.ang_can[c] += w * (orbital + spin);
                    }
                    let local = t.scale();
                    if local > 0.0 {
                        s.decomposition = s.decomposition.max(t.decomposition_residual() / local);
                        s.literal = s.literal.max(t.literal_decomposition_residual() / local);
                    }
                }
            }
            s
        })
        .collect();
    let s = slices.iter().fold(Sums::default(), |acc, x| acc.merge(x));
    let [energy] = pair_group([s.sym[0]], [s.can_first[0]]);
    Ok(VolumeReport {
        gauge: match gauge {
            Gauge::Radiation => "radiation",
            Gauge::Shifted(_) => "shifted",
        },
        x0,
        nodes: [nx, ny, nz],
        fd_spacing: grid.fd.spacing[1],
        energy,
        momentum: pair_group([s.sym[1], s.sym[2], s.sym[3]], [s.can_first[1], s.can_first[2], s.can_first[3]]),
        momentum_second_index: pair_group(
            [s.sym[1], s.sym[2], s.sym[3]],
            [s.can_second[1], s.can_second[2], s.can_second[3]],
        ),
        angular: pair_group(s.ang_sym, s.ang_can),
        divergence_terms: s.spin,
        boundary_flux: boundary_flux(&config, gauge, grid),
        boundary_ratio: ratio,
        decomposition_residual: s.decomposition,
        literal_decomposition_residual: s.literal,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RefinementReport {
    pub coarse: VolumeReport,
    pub fine: VolumeReport,
    /// Coarse over fine residual; `None` when the coarse residual is already
    /// at rounding level.
    pub energy_ratio: Option<f64>,
    pub momentum_ratio: Option<f64>,
    pub angular_ratio: Option<f64>,
}

fn ratio(coarse: f64, fine: f64) -> Option<f64> {
    (coarse > ROUNDING_FLOOR).then(|| coarse / fine)
}

/// Runs the checks at `grid` and again with the stencil spacing halved.
pub fn refinement_check(packet: &CompactWavePacket, gauge: &Gauge, grid: &VolumeGrid) -> Result<RefinementReport> {
    let coarse = volume_integral_checks(packet, gauge, grid)?;
    let fine = volume_integral_checks(packet, gauge, &grid.halved())?;
    Ok(RefinementReport {
        energy_ratio: ratio(coarse.energy.relative, fine.energy.relative),
        momentum_ratio: ratio(coarse.max_momentum_relative(), fine.max_momentum_relative()),
        angular_ratio: ratio(coarse.max_angular_relative(), fine.max_angular_relative()),
        coarse,
        fine,
    })
}
