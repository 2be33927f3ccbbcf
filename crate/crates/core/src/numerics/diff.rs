//! Fourth-order central finite differences.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Finite-difference stencil spacing and the region it is applied to.
///
/// Axes are ordered `(x⁰, x¹, x², x³)`; the stencil order is fixed at four.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid4 {
    pub spacing: [f64; 4],
    pub lower: [f64; 4],
    pub upper: [f64; 4],
}

impl Grid4 {
    pub const ORDER: usize = 4;

    pub fn new(spacing: [f64; 4], lower: [f64; 4], upper: [f64; 4]) -> Result<Self> {
        if spacing.iter().any(|&h| !(h > 0.0 && h.is_finite())) {
            return Err(Error::argument("grid spacing must be positive and finite"));
        }
        if lower.iter().zip(&upper).any(|(l, u)| !(l <= u)) {
            return Err(Error::argument("grid extent must have lower <= upper"));
        }
        Ok(Grid4 {
            spacing,
            lower,
            upper,
        })
    }

    /// Same spacing on every axis, unbounded extent.
    pub fn uniform(h: f64) -> Result<Self> {
        Self::new(
            [h; 4],
            [f64::NEG_INFINITY; 4],
            [f64::INFINITY; 4],
        )
    }

    pub fn contains(&self, p: &[f64; 4]) -> bool {
        (0..4).all(|i| p[i] >= self.lower[i] && p[i] <= self.upper[i])
    }

    pub fn halved(&self) -> Self {
        Grid4 {
            spacing: self.spacing.map(|h| 0.5 * h),
            ..*self
        }
    }
}

/// `f'(x)` from the five-point stencil.
pub fn derivative<V, F>(f: F, x: f64, h: f64) -> V
where
    F: Fn(f64) -> V,
    V: Copy + Add<Output = V> + Sub<Output = V> + Mul<f64, Output = V>,
{
    let a = f(x - 2.0 * h);
    let b = f(x - h);
    let c = f(x + h);
    let d = f(x + 2.0 * h);
    ((a - d) + (c - b) * 8.0) * (1.0 / (12.0 * h))
}

/// `f''(x)` from the five-point stencil.
pub fn second_derivative<V, F>(f: F, x: f64, h: f64) -> V
where
    F: Fn(f64) -> V,
    V: Copy + Add<Output = V> + Sub<Output = V> + Mul<f64, Output = V>,
{
    let a = f(x - 2.0 * h);
    let b = f(x - h);
    let m = f(x);
    let c = f(x + h);
    let d = f(x + 2.0 * h);
    ((b + c) * 16.0 - (a + d) - m * 30.0) * (1.0 / (12.0 * h * h))
}

/// All first partials `∂_μ f_n` of a vector-valued function of spacetime.
///
/// `out[mu][n]` holds `∂f_n/∂x^mu`.
pub fn partial_derivatives<const N: usize, F>(f: F, point: [f64; 4], grid: &Grid4) -> [[f64; N]; 4]
where
    F: Fn([f64; 4]) -> [f64; N],
{
    let mut out = [[0.0; N]; 4];
    for (mu, row) in out.iter_mut().enumerate() {
        let h = grid.spacing[mu];
        let at = |offset: f64| {
            let mut p = point;
            p[mu] += offset;
            f(p)
        };
        let a = at(-2.0 * h);
        let b = at(-h);
        let c = at(h);
        let d = at(2.0 * h);
        for n in 0..N {
            row[n] = ((a[n] - d[n]) + 8.0 * (c[n] - b[n])) / (12.0 * h);
        }
    }
    out
}

/// Spatial Laplacian of a scalar (real or complex) field of position.
pub fn laplacian<V, F>(f: F, x: [f64; 3], h: f64) -> V
where
    F: Fn([f64; 3]) -> V,
    V: Copy + Add<Output = V> + Sub<Output = V> + Mul<f64, Output = V>,
{
    let along = |axis: usize| {
        second_derivative(
            |s| {
                let mut p = x;
                p[axis] = s;
                f(p)
            },
            x[axis],
            h,
        )
    };
    along(0) + along(1) + along(2)
}
