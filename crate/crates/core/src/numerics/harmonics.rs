//! Spherical harmonics and outgoing spherical Hankel functions.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Associated Legendre function `P_l^m(x)` including the Condon-Shortley phase,
/// for `0 <= m <= l`.
pub fn associated_legendre(l: u32, m: u32, x: f64) -> f64 {
    assert!(m <= l, "associated_legendre requires m <= l");
    let mut pmm = 1.0;
    if m > 0 {
        let s = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
        let mut odd = 1.0;
        for _ in 0..m {
            pmm *= -odd * s;
            odd += 2.0;
        }
    }
    if l == m {
        return pmm;
    }
    let mut pm1 = x * (2 * m + 1) as f64 * pmm;
    if l == m + 1 {
        return pm1;
    }
    let mut pll = 0.0;
    for ll in (m + 2)..=l {
        pll = (x * (2 * ll - 1) as f64 * pm1 - (ll + m - 1) as f64 * pmm) / (ll - m) as f64;
        pmm = pm1;
        pm1 = pll;
    }
    pll
}

/// Orthonormal spherical harmonic `Y_lm(θ, φ)`; zero when `|m| > l`.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Complex64 {
    let am = m.unsigned_abs();
    if am > l {
        return Complex64::new(0.0, 0.0);
    }
    // (l-|m|)!/(l+|m|)!
    let mut ratio = 1.0;
    for k in (l - am + 1)..=(l + am) {
        ratio /= k as f64;
    }
    let norm = ((2 * l + 1) as f64 / (4.0 * PI) * ratio).sqrt();
    let p = associated_legendre(l, am, theta.cos());
    let y = Complex64::from_polar(norm * p, am as f64 * phi);
    if m >= 0 {
        y
    } else if am % 2 == 0 {
        y.conj()
    } else {
        -y.conj()
    }
}

/// Outgoing spherical Hankel function `h_l⁽¹⁾(x)` for `x > 0`.
pub fn spherical_hankel1(l: u32, x: f64) -> Complex64 {
    let i = Complex64::i();
    let e = Complex64::from_polar(1.0, x);
    let h0 = -i * e / x;
    if l == 0 {
        return h0;
    }
    let mut prev = h0;
    let mut cur = -e * (x + i) / (x * x);
    for n in 1..l {
        let next = cur * ((2 * n + 1) as f64 / x) - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `d/dx [x h_l⁽¹⁾(x)]` for `l >= 1`.
pub fn riccati_hankel1_derivative(l: u32, x: f64) -> Complex64 {
    assert!(l >= 1);
    spherical_hankel1(l - 1, x) * x - spherical_hankel1(l, x) * l as f64
}
