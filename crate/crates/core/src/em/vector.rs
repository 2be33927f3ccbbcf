//! Small fixed-size vector helpers.

use num_complex::Complex64;

pub type Vec3 = [f64; 3];
pub type CVec3 = [Complex64; 3];

pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub fn scale(a: Vec3, s: f64) -> Vec3 {
    a.map(|x| x * s)
}

pub fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn ccross(a: CVec3, b: CVec3) -> CVec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// `Σ |aᵢ|²`
pub fn cnorm_sqr(a: CVec3) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

pub fn conj(a: CVec3) -> CVec3 {
    a.map(|z| z.conj())
}

pub fn re(a: CVec3) -> Vec3 {
    a.map(|z| z.re)
}

pub fn cscale(a: CVec3, s: Complex64) -> CVec3 {
    a.map(|z| z * s)
}

pub fn real_to_complex(a: Vec3) -> CVec3 {
    a.map(|x| Complex64::new(x, 0.0))
}

pub fn unit(a: Vec3) -> Vec3 {
    scale(a, 1.0 / norm(a))
}
