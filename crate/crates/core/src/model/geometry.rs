//! Vector fields, closed loops and oriented surface patches, with period
//! (line) and flux integrals over them.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::constants::HBAR;
use crate::em::vector::{add, cross, dot, norm, scale, sub, Vec3};
use crate::error::{Error, Result};
use crate::numerics::{derivative, gauss_legendre};

pub trait VectorField: Send + Sync {
    fn value(&self, x: Vec3) -> Vec3;

    /// Distance from `x` to the nearest point where the field is undefined.
    fn singularity_distance(&self, _x: Vec3) -> f64 {
        f64::INFINITY
    }
}

/// `a = (q/2π)∇φ` around a line parallel to z; `∮a·dl = q × winding`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Vortex {
    pub quantum: f64,
    /// `(x, y)` where the excluded axis pierces the xy plane.
    pub axis: [f64; 2],
}

impl Vortex {
    /// Quantum `ℏ` on the z axis.
    pub fn hbar() -> Self {
        Vortex {
            quantum: HBAR,
            axis: [0.0, 0.0],
        }
    }
}

impl VectorField for Vortex {
    fn value(&self, x: Vec3) -> Vec3 {
        let (dx, dy) = (x[0] - self.axis[0], x[1] - self.axis[1]);
        let r2 = dx * dx + dy * dy;
        let s = self.quantum / (2.0 * PI * r2);
        [-dy * s, dx * s, 0.0]
    }

    fn singularity_distance(&self, x: Vec3) -> f64 {
        (x[0] - self.axis[0]).hypot(x[1] - self.axis[1])
    }
}

/// A field given directly as the gradient of a single-valued scalar.
pub struct GradientField<F>(pub F);

impl<F: Fn(Vec3) -> Vec3 + Send + Sync> VectorField for GradientField<F> {
    fn value(&self, x: Vec3) -> Vec3 {
        (self.0)(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UniformField(pub Vec3);

impl VectorField for UniformField {
    fn value(&self, _x: Vec3) -> Vec3 {
        self.0
    }
}

/// Azimuthal potential of a circularly polarized beam cross-section,
/// `a = A₀ exp(−ρ²/w²)(−y, x, 0)/w²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BeamModel {
    pub amplitude: f64,
    pub waist: f64,
}

impl BeamModel {
    /// `(∇ × a)_z = (2A₀/w²)(1 − ρ²/w²) exp(−ρ²/w²)`
    pub fn curl_z(&self, x: Vec3) -> f64 {
        let w2 = self.waist * self.waist;
        let r2 = (x[0] * x[0] + x[1] * x[1]) / w2;
        2.0 * self.amplitude / w2 * (1.0 - r2) * (-r2).exp()
    }
}

impl VectorField for BeamModel {
    fn value(&self, x: Vec3) -> Vec3 {
        let w2 = self.waist * self.waist;
        let s = self.amplitude * (-(x[0] * x[0] + x[1] * x[1]) / w2).exp() / w2;
        [-x[1] * s, x[0] * s, 0.0]
    }
}

/// Fourth-order finite-difference curl of another field.
pub struct Curl<F> {
    pub field: F,
    pub spacing: f64,
}

impl<F: VectorField> VectorField for Curl<F> {
    fn value(&self, x: Vec3) -> Vec3 {
        let d = |axis: usize, comp: usize| {
            derivative(
                |s| {
                    let mut p = x;
                    p[axis] = s;
                    self.field.value(p)[comp]
                },
                x[axis],
                self.spacing,
            )
        };
        [d(1, 2) - d(2, 1), d(2, 0) - d(0, 2), d(0, 1) - d(1, 0)]
    }

    fn singularity_distance(&self, x: Vec3) -> f64 {
        self.field.singularity_distance(x) - 2.0 * self.spacing
    }
}

type CurveFn = Arc<dyn Fn(f64) -> (Vec3, Vec3) + Send + Sync>;
type SurfaceFn = Arc<dyn Fn(f64, f64) -> (Vec3, Vec3, Vec3) + Send + Sync>;

enum LoopShape {
    /// In the plane `z = center.z`, counter-clockwise for positive winding.
    Ellipse { center: Vec3, a: f64, b: f64, windings: i32 },
    Custom(CurveFn),
}

/// A closed curve `r(t)`, `t ∈ [0, 1]`.
#[derive(Clone)]
pub struct LoopPath {
    shape: Arc<LoopShape>,
    label: String,
    scale: f64,
}

impl fmt::Debug for LoopPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LoopPath").field("label", &self.label).field("scale", &self.scale).finish()
    }
}

/// Largest closure gap accepted, relative to the loop size.
pub const CLOSURE_TOLERANCE: f64 = 1e-12;

impl LoopPath {
    pub fn circle(center: Vec3, radius: f64, windings: i32) -> Result<Self> {
        Self::ellipse(center, radius, radius, windings)
    }

    pub fn ellipse(center: Vec3, a: f64, b: f64, windings: i32) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(Error::Geometry(format!("semi-axes must be positive, got {a}, {b}")));
        }
        if windings == 0 {
            return Err(Error::Geometry("a loop needs a non-zero winding count".into()));
        }
        Ok(LoopPath {
            shape: Arc::new(LoopShape::Ellipse { center, a, b, windings }),
            label: format!("ellipse(a={a}, b={b}, windings={windings})"),
            scale: 2.0 * a.max(b),
        })
    }

    /// A curve given as `t ↦ (r(t), r'(t))`; it must close to
    /// [`CLOSURE_TOLERANCE`] of its extent.
    pub fn custom(label: impl Into<String>, f: impl Fn(f64) -> (Vec3, Vec3) + Send + Sync + 'static) -> Result<Self> {
        let f: CurveFn = Arc::new(f);
        let samples: Vec<Vec3> = (0..=256).map(|i| f(i as f64 / 256.0).0).collect();
        let mut extent: f64 = 0.0;
        for p in &samples {
            extent = extent.max(norm(sub(*p, samples[0])));
        }
        if !(extent > 0.0 && extent.is_finite()) {
            return Err(Error::Geometry("loop has no extent".into()));
        }
        let gap = norm(sub(f(1.0).0, f(0.0).0));
        if gap > CLOSURE_TOLERANCE * extent {
            return Err(Error::Geometry(format!(
                "loop does not close: gap {gap:e} over extent {extent:e}"
            )));
        }
        Ok(LoopPath {
            shape: Arc::new(LoopShape::Custom(f)),
            label: label.into(),
            scale: extent,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Characteristic size used for guards and tolerances.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// `(r(t), dr/dt)`
    pub fn point(&self, t: f64) -> (Vec3, Vec3) {
        match &*self.shape {
            LoopShape::Ellipse { center, a, b, windings } => {
                let w = 2.0 * PI * *windings as f64;
                let (s, c) = (w * t).sin_cos();
                (add(*center, [a * c, b * s, 0.0]), [-a * w * s, b * w * c, 0.0])
            }
            LoopShape::Custom(f) => f(t),
        }
    }

    /// Smallest field-singularity distance along the loop.
    fn closest_approach(&self, field: &dyn VectorField) -> f64 {
        const N: usize = 4096;
        let dist = |t: f64| field.singularity_distance(self.point(t).0);
        let (mut best_t, mut best) = (0.0, f64::INFINITY);
        for i in 0..N {
            let t = i as f64 / N as f64;
            let d = dist(t);
            if d < best {
                best = d;
                best_t = t;
            }
        }
        if !best.is_finite() {
            return best;
        }
        let (mut lo, mut hi) = (best_t - 1.0 / N as f64, best_t + 1.0 / N as f64);
        for _ in 0..100 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if dist(m1.rem_euclid(1.0)) < dist(m2.rem_euclid(1.0)) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        best.min(dist((0.5 * (lo + hi)).rem_euclid(1.0)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeriodOptions {
    /// Convergence under panel doubling, relative to `∮|a·dl|`.
    pub rel_tol: f64,
    /// Minimum singularity distance as a fraction of the loop scale.
    pub guard: f64,
    pub initial_panels: usize,
    pub max_panels: usize,
    pub order: usize,
}

impl Default for PeriodOptions {
    fn default() -> Self {
        PeriodOptions {
            rel_tol: 1e-12,
            guard: 1e-9,
            initial_panels: 16,
            max_panels: 1 << 16,
            order: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeriodIntegral {
    pub value: f64,
    /// Change under the last panel doubling.
    pub error: f64,
    /// `∮|a·dl|`, the scale of the integrand.
    pub magnitude: f64,
    pub panels: usize,
    pub closest_approach: f64,
}

fn composite(panels: usize, nodes: &[f64], weights: &[f64], mut f: impl FnMut(f64, f64)) {
    let h = 1.0 / panels as f64;
    for p in 0..panels {
        let a = p as f64 * h;
        for (x, w) in nodes.iter().zip(weights) {
            f(a + 0.5 * h * (x + 1.0), 0.5 * h * w);
        }
    }
}

/// `∮ a·dl` by composite Gauss-Legendre quadrature in the loop parameter,
/// doubling the panel count until it settles.
pub fn period_integral(a: &dyn VectorField, path: &LoopPath, opts: &PeriodOptions) -> Result<PeriodIntegral> {
    let closest = path.closest_approach(a);
    if closest < opts.guard * path.scale() {
        return Err(Error::Geometry(format!(
            "loop passes within {closest:e} of a field singularity (guard {:e})",
            opts.guard * path.scale()
        )));
    }
    let (nodes, weights) = gauss_legendre(opts.order);
    let eval = |panels: usize| {
        let (mut s, mut m) = (0.0, 0.0);
        composite(panels, &nodes, &weights, |t, w| {
            let (r, dr) = path.point(t);
            let v = dot(a.value(r), dr);
            s += w * v;
            m += w * v.abs();
        });
        (s, m)
    };
    let mut panels = opts.initial_panels.max(1);
    let (mut prev, _) = eval(panels);
    loop {
        panels *= 2;
        let (value, magnitude) = eval(panels);
        let error = (value - prev).abs();
        if error <= opts.rel_tol * magnitude || magnitude == 0.0 {
            return Ok(PeriodIntegral {
                value,
                error,
                magnitude,
                panels,
                closest_approach: closest,
            });
        }
        if panels >= opts.max_panels {
            return Err(Error::NonConvergence {
                subdivisions: panels,
                value,
                error,
                tolerance: opts.rel_tol * magnitude,
            });
        }
        prev = value;
    }
}

enum SurfaceShape {
    /// `center + uR(cos 2πv, sin 2πv, 0)`, normal +z.
    Disk { center: Vec3, radius: f64 },
    /// `origin + u e₁ + v e₂`, normal `e₁ × e₂`.
    Parallelogram { origin: Vec3, e1: Vec3, e2: Vec3 },
    Custom(SurfaceFn),
}

/// An oriented surface `r(u, v)` over the unit parameter square with normal
/// `∂r/∂u × ∂r/∂v`.
#[derive(Clone)]
pub struct SurfacePatch {
    shape: Arc<SurfaceShape>,
    label: String,
}

impl fmt::Debug for SurfacePatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SurfacePatch").field("label", &self.label).finish()
    }
}

impl SurfacePatch {
    pub fn disk(center: Vec3, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Geometry(format!("disk radius must be positive, got {radius}")));
        }
        Ok(SurfacePatch {
            shape: Arc::new(SurfaceShape::Disk { center, radius }),
            label: format!("disk(radius={radius})"),
        })
    }

    pub fn parallelogram(origin: Vec3, e1: Vec3, e2: Vec3) -> Result<Self> {
        if norm(cross(e1, e2)) == 0.0 {
            return Err(Error::Geometry("parallelogram edges are parallel".into()));
        }
        Ok(SurfacePatch {
            shape: Arc::new(SurfaceShape::Parallelogram { origin, e1, e2 }),
            label: "parallelogram".into(),
        })
    }

    /// A surface given as `(u, v) ↦ (r, ∂r/∂u, ∂r/∂v)`.
    pub fn custom(label: impl Into<String>, f: impl Fn(f64, f64) -> (Vec3, Vec3, Vec3) + Send + Sync + 'static) -> Self {
        SurfacePatch {
            shape: Arc::new(SurfaceShape::Custom(Arc::new(f))),
            label: label.into(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn point(&self, u: f64, v: f64) -> (Vec3, Vec3, Vec3) {
        match &*self.shape {
            SurfaceShape::Disk { center, radius } => {
                let (s, c) = (2.0 * PI * v).sin_cos();
                let r = add(*center, [u * radius * c, u * radius * s, 0.0]);
                let du = [radius * c, radius * s, 0.0];
                let dv = [-2.0 * PI * u * radius * s, 2.0 * PI * u * radius * c, 0.0];
                (r, du, dv)
            }
            SurfaceShape::Parallelogram { origin, e1, e2 } => (add(*origin, add(scale(*e1, u), scale(*e2, v))), *e1, *e2),
            SurfaceShape::Custom(f) => f(u, v),
        }
    }

    /// Image of the parameter-square boundary, traversed so that it is
    /// positively oriented with respect to the normal.
    pub fn boundary(&self) -> Result<LoopPath> {
        let patch = self.clone();
        LoopPath::custom(format!("boundary of {}", self.label), move |t| {
            let s = ((4.0 * t).floor() as usize).min(3);
            let tau = 4.0 * t - s as f64;
            let (u, v, su, sv) = match s {
                0 => (tau, 0.0, 4.0, 0.0),
                1 => (1.0, tau, 0.0, 4.0),
                2 => (1.0 - tau, 1.0, -4.0, 0.0),
                _ => (0.0, 1.0 - tau, 0.0, -4.0),
            };
            let (r, du, dv) = patch.point(u, v);
            (r, add(scale(du, su), scale(dv, sv)))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FluxIntegral {
    pub value: f64,
    pub error: f64,
    /// `∫|b·dS|`
    pub magnitude: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FluxOptions {
    /// Convergence under panel doubling, relative to `∫|b·dS|`.
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_panels: usize,
    pub order: usize,
}

impl Default for FluxOptions {
    fn default() -> Self {
        FluxOptions {
            rel_tol: 1e-12,
            abs_tol: 0.0,
            max_panels: 256,
            order: 8,
        }
    }
}

/// `∫ b·dS` by tensor-product composite Gauss-Legendre quadrature, doubling
/// the panels per direction until the value settles.
pub fn flux_integral(b: &dyn VectorField, surface: &SurfacePatch, opts: &FluxOptions) -> Result<FluxIntegral> {
    let (nodes, weights) = gauss_legendre(opts.order);
    let eval = |panels: usize| {
        let (mut s, mut m) = (0.0, 0.0);
        composite(panels, &nodes, &weights, |u, wu| {
            composite(panels, &nodes, &weights, |v, wv| {
                let (r, du, dv) = surface.point(u, v);
                let f = dot(b.value(r), cross(du, dv));
                s += wu * wv * f;
                m += wu * wv * f.abs();
            });
        });
        (s, m)
    };
    let mut panels = 2;
    let (mut prev, _) = eval(panels);
    loop {
        panels *= 2;
        let (value, magnitude) = eval(panels);
        let error = (value - prev).abs();
        let tolerance = (opts.rel_tol * magnitude).max(opts.abs_tol);
        if error <= tolerance || magnitude == 0.0 {
            return Ok(FluxIntegral {
                value,
                error,
                magnitude,
                panels,
            });
        }
        if panels >= opts.max_panels {
            return Err(Error::NonConvergence {
                subdivisions: panels,
                value,
                error,
                tolerance,
            });
        }
        prev = value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> PeriodOptions {
        PeriodOptions::default()
    }

    #[test]
    fn vortex_windings() {
        let v = Vortex::hbar();
        for n in [1, 2, 3, -1] {
            let path = LoopPath::circle([0.0, 0.0, 0.4], 1.0, n).unwrap();
            let r = period_integral(&v, &path, &opts()).unwrap();
            assert!((r.value - n as f64 * HBAR).abs() < 1e-9 * HBAR, "{n}: {r:?}");
        }
        let off = LoopPath::ellipse([0.3, -0.2, 0.0], 2.0, 0.7, 1).unwrap();
        let r = period_integral(&v, &off, &opts()).unwrap();
        assert!((r.value - HBAR).abs() < 1e-9 * HBAR);
        let outside = LoopPath::circle([3.0, 0.0, 0.0], 1.0, 1).unwrap();
        let r = period_integral(&v, &outside, &opts()).unwrap();
        assert!(r.value.abs() < 1e-12 * r.magnitude);
    }

    #[test]
    fn explicit_double_traversal() {
        let v = Vortex::hbar();
        let twice = LoopPath::custom("double", |t| {
            let w = 4.0 * PI;
            let (s, c) = (w * t).sin_cos();
            ([1.5 * c, 1.5 * s, 0.0], [-1.5 * w * s, 1.5 * w * c, 0.0])
        })
        .unwrap();
        let r = period_integral(&v, &twice, &opts()).unwrap();
        assert!((r.value - 2.0 * HBAR).abs() < 1e-9 * HBAR);
    }

    #[test]
    fn reparameterization_invariance() {
        let v = Vortex {
            quantum: 2.0,
            axis: [0.1, 0.2],
        };
        let plain = LoopPath::ellipse([0.0; 3], 1.2, 0.8, 1).unwrap();
        let warped = LoopPath::custom("warped", |t| {
            let eps = 0.15;
            let s = t + eps * (2.0 * PI * t).sin() / (2.0 * PI);
            let ds = 1.0 + eps * (2.0 * PI * t).cos();
            let w = 2.0 * PI;
            let (sn, c) = (w * s).sin_cos();
            ([1.2 * c, 0.8 * sn, 0.0], [-1.2 * w * sn * ds, 0.8 * w * c * ds, 0.0])
        })
        .unwrap();
        let a = period_integral(&v, &plain, &opts()).unwrap().value;
        let b = period_integral(&v, &warped, &opts()).unwrap().value;
        assert!((a - b).abs() < 1e-9 * a.abs());
    }

    #[test]
    fn gradient_fields_have_no_period() {
        let g = GradientField(|x: Vec3| [x[1].cos() * 2.0 * x[0], -x[0] * x[0] * x[1].sin() + x[2], x[1]]);
        for path in [
            LoopPath::circle([0.2, 0.1, 0.3], 1.3, 1).unwrap(),
            LoopPath::ellipse([-1.0, 0.4, 0.0], 0.5, 2.5, 3).unwrap(),
        ] {
            let r = period_integral(&g, &path, &opts()).unwrap();
            assert!(r.value.abs() < 1e-12 * r.magnitude, "{r:?}");
        }
    }

    #[test]
    fn singularity_guard() {
        let v = Vortex::hbar();
        let through = LoopPath::circle([1.0, 0.0, 0.0], 1.0, 1).unwrap();
        assert!(matches!(period_integral(&v, &through, &opts()), Err(Error::Geometry(_))));
        let near = LoopPath::circle([1.0 + 1e-12, 0.0, 0.0], 1.0, 1).unwrap();
        assert!(matches!(period_integral(&v, &near, &opts()), Err(Error::Geometry(_))));
    }

    #[test]
    fn open_curve_rejected() {
        let r = LoopPath::custom("arc", |t| ([t.cos(), t.sin(), 0.0], [-t.sin(), t.cos(), 0.0]));
        assert!(matches!(r, Err(Error::Geometry(_))));
    }

    #[test]
    fn uniform_flux_through_disk() {
        let disk = SurfacePatch::disk([0.3, 0.0, 1.0], 1.0).unwrap();
        let f = flux_integral(&UniformField([0.2, 0.1, 2.5]), &disk, &FluxOptions::default()).unwrap();
        assert!((f.value - PI * 2.5).abs() < 1e-12 * PI * 2.5);
        let sq = SurfacePatch::parallelogram([0.0; 3], [2.0, 0.0, 0.0], [0.0, 3.0, 0.0]).unwrap();
        let f = flux_integral(&UniformField([0.0, 0.0, 1.0]), &sq, &FluxOptions::default()).unwrap();
        assert!((f.value - 6.0).abs() < 1e-12);
    }

    #[test]
    fn pure_gauge_has_no_flux() {
        let g = GradientField(|x: Vec3| [x[1] * x[2], x[0] * x[2], x[0] * x[1]]);
        let curl = Curl {
            field: g,
            spacing: 1e-3,
        };
        let disk = SurfacePatch::disk([0.2, -0.1, 0.5], 1.5).unwrap();
        let f = flux_integral(&curl, &disk, &FluxOptions { abs_tol: 1e-12, ..Default::default() }).unwrap();
        assert!(f.value.abs() < 1e-12, "{f:?}");
    }

    #[test]
    fn stokes_on_beam() {
        let beam = BeamModel {
            amplitude: 3.0,
            waist: 0.8,
        };
        let disk = SurfacePatch::disk([0.2 * 0.8, -0.1 * 0.8, 0.0], 1.5 * 0.8).unwrap();
        let curl = Curl {
            field: beam,
            spacing: 1e-3 * 0.8,
        };
        let flux = flux_integral(&curl, &disk, &FluxOptions::default()).unwrap();
        let boundary = disk.boundary().unwrap();
        let period = period_integral(&beam, &boundary, &opts()).unwrap();
        assert!((flux.value - period.value).abs() < 1e-8 * period.value.abs(), "{flux:?} {period:?}");
        let analytic = flux_integral(&GradientField(|x: Vec3| [0.0, 0.0, beam.curl_z(x)]), &disk, &FluxOptions::default()).unwrap();
        assert!((analytic.value - period.value).abs() < 1e-10 * period.value.abs());
    }
}
