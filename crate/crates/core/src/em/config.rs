//! Analytic field configurations in Gaussian units.
//!
//! Spacetime points are `[x⁰, x, y, z]` with `x⁰ = ct` in cm. Potentials are
//! returned with upper indices, `A^μ = (φ, A)`.

use num_complex::Complex64;
use serde::Serialize;

use super::vector::*;
use crate::constants::SPEED_OF_LIGHT_CGS;
use crate::error::{Error, Result};
use crate::numerics::harmonics::riccati_hankel1_derivative;
use crate::numerics::{spherical_hankel1, spherical_harmonic};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Two complex amplitudes on a transverse basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Jones {
    pub a: Complex64,
    pub b: Complex64,
}

impl Jones {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        Jones { a, b }
    }

    pub fn linear(angle: f64) -> Self {
        Jones::new(angle.cos().into(), angle.sin().into())
    }

    /// Unit-intensity circular polarization; `helicity` is ±1.
    pub fn circular(helicity: i8) -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Jones::new(Complex64::new(s, 0.0), Complex64::new(0.0, s * helicity as f64))
    }

    pub fn intensity(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }
}

/// Monochromatic plane wave in radiation gauge,
/// `A = Re[A₀ ε e^{i(k·x − ωt)}]` with `ε` transverse to `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlaneWave {
    /// cm⁻¹
    pub k: Vec3,
    pub jones: Jones,
    pub amplitude: f64,
}

impl PlaneWave {
    pub fn new(k: Vec3, jones: Jones, amplitude: f64) -> Result<Self> {
        if !(norm(k) > 0.0 && k.iter().all(|x| x.is_finite())) {
            return Err(Error::domain("plane-wave vector must be finite and non-zero"));
        }
        Ok(PlaneWave { k, jones, amplitude })
    }

    /// Wave along `direction` at frequency `nu` (Hz).
    pub fn with_frequency(direction: Vec3, nu: f64, jones: Jones, amplitude: f64) -> Result<Self> {
        if !(nu > 0.0) || norm(direction) == 0.0 {
            return Err(Error::domain("frequency and direction must be non-zero"));
        }
        let k = 2.0 * std::f64::consts::PI * nu / SPEED_OF_LIGHT_CGS;
        Self::new(scale(unit(direction), k), jones, amplitude)
    }

    /// Orthonormal `(e₁, e₂)` with `e₁ × e₂ = k̂`.
    pub fn basis(&self) -> (Vec3, Vec3) {
        let n = unit(self.k);
        let seed = if n[1].abs() < 0.9 { [0.0, 1.0, 0.0] } else { [0.0, 0.0, 1.0] };
        let e1 = unit(cross(seed, n));
        let e2 = cross(n, e1);
        (e1, e2)
    }

    pub fn polarization(&self) -> CVec3 {
        let (e1, e2) = self.basis();
        std::array::from_fn(|i| self.jones.a * e1[i] + self.jones.b * e2[i])
    }

    pub fn wavenumber(&self) -> f64 {
        norm(self.k)
    }

    pub fn omega(&self) -> f64 {
        SPEED_OF_LIGHT_CGS * self.wavenumber()
    }

    pub fn frequency(&self) -> f64 {
        self.omega() / (2.0 * std::f64::consts::PI)
    }

    fn phase(&self, p: [f64; 4]) -> Complex64 {
        let theta = dot(self.k, [p[1], p[2], p[3]]) - self.wavenumber() * p[0];
        Complex64::from_polar(1.0, theta)
    }

    fn potential(&self, p: [f64; 4]) -> [f64; 4] {
        let e = self.polarization();
        let w = self.phase(p) * self.amplitude;
        [0.0, (e[0] * w).re, (e[1] * w).re, (e[2] * w).re]
    }

    fn complex_fields(&self, x: Vec3) -> (CVec3, CVec3) {
        let w = Complex64::from_polar(self.amplitude, dot(self.k, x));
        let eps = self.polarization();
        let e = cscale(eps, I * self.wavenumber() * w);
        let b = cscale(ccross(real_to_complex(self.k), eps), I * w);
        (e, b)
    }
}

/// Transverse-electric multipole `E = a h_l⁽¹⁾(kr) X_lm` with time factor
/// `e^{−iωt}`, potentials `A = −iE/k`, `φ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MagneticMultipole {
    pub l: u32,
    pub m: i32,
    /// rad/s
    pub omega: f64,
    pub amplitude: f64,
}

impl MagneticMultipole {
    pub fn new(l: u32, m: i32, omega: f64, amplitude: f64) -> Result<Self> {
        if l == 0 {
            return Err(Error::domain("multipole order l must be at least 1"));
        }
        if m.unsigned_abs() > l {
            return Err(Error::domain(format!("|m| must not exceed l, got l={l}, m={m}")));
        }
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::domain(format!("angular frequency must be positive, got {omega}")));
        }
        Ok(MagneticMultipole { l, m, omega, amplitude })
    }

    pub fn wavenumber(&self) -> f64 {
        self.omega / SPEED_OF_LIGHT_CGS
    }

    /// Complex `(Ẽ, B̃)` at `x`; zero at the origin.
    pub fn complex_fields(&self, x: Vec3) -> (CVec3, CVec3) {
        let r = norm(x);
        if r == 0.0 {
            let z = [Complex64::new(0.0, 0.0); 3];
            return (z, z);
        }
        let theta = (x[0].hypot(x[1])).atan2(x[2]);
        let phi = x[1].atan2(x[0]);
        let kr = self.wavenumber() * r;
        let h = spherical_hankel1(self.l, kr);
        let dh = riccati_hankel1_derivative(self.l, kr);
        let xv = vector_spherical_harmonic(self.l, self.m, theta, phi);
        let y = spherical_harmonic(self.l, self.m, theta, phi);
        let n = scale(x, 1.0 / r);
        let ll = ((self.l * (self.l + 1)) as f64).sqrt();
        let e = cscale(xv, h * self.amplitude);
        let radial = cscale(real_to_complex(n), y * h * (ll / kr));
        let tangential = cscale(ccross(real_to_complex(n), xv), -I * dh / kr);
        let b = std::array::from_fn(|i| (radial[i] + tangential[i]) * self.amplitude);
        (e, b)
    }

    fn potential(&self, p: [f64; 4]) -> [f64; 4] {
        let (e, _) = self.complex_fields([p[1], p[2], p[3]]);
        let w = Complex64::from_polar(1.0, -self.wavenumber() * p[0]) * (-I / self.wavenumber());
        [0.0, (e[0] * w).re, (e[1] * w).re, (e[2] * w).re]
    }
}

/// `X_lm = L Y_lm / √(l(l+1))` in Cartesian components.
pub fn vector_spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> CVec3 {
    let li = l as i32;
    let y = |mm: i32| {
        if mm.abs() > li {
            Complex64::new(0.0, 0.0)
        } else {
            spherical_harmonic(l, mm, theta, phi)
        }
    };
    let lf = l as f64;
    let mf = m as f64;
    let up = y(m + 1) * ((lf - mf) * (lf + mf + 1.0)).sqrt();
    let down = y(m - 1) * ((lf + mf) * (lf - mf + 1.0)).sqrt();
    let lx = (up + down) * 0.5;
    let ly = (up - down) / (2.0 * I);
    let lz = y(m) * mf;
    let norm = 1.0 / (lf * (lf + 1.0)).sqrt();
    [lx * norm, ly * norm, lz * norm]
}

/// Localized packet `A = Re[∇ψ × m]` with
/// `ψ = A₀ exp(−|x − x_c − ẑct|²/σ²) exp(ik(z − ct))`, `m = j₁x̂ + j₂ŷ`,
/// and `φ = 0`.
///
/// `∇·A = 0` and `∇·E = 0` hold exactly; the envelope travels rigidly at
/// `c` so the evolution equations hold only to paraxial accuracy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CompactWavePacket {
    /// Carrier wavenumber along z, cm⁻¹.
    pub k: f64,
    /// Envelope width σ, cm.
    pub width: f64,
    /// Envelope center at `x⁰ = 0`, cm.
    pub center: Vec3,
    pub amplitude: f64,
    pub jones: Jones,
}

impl CompactWavePacket {
    pub fn new(k: f64, width: f64, center: Vec3, amplitude: f64, jones: Jones) -> Result<Self> {
        if !(k >= 0.0 && k.is_finite()) {
            return Err(Error::domain(format!("carrier wavenumber must be >= 0, got {k}")));
        }
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::domain(format!("envelope width must be positive, got {width}")));
        }
        Ok(CompactWavePacket {
            k,
            width,
            center,
            amplitude,
            jones,
        })
    }

    fn moment(&self) -> CVec3 {
        [self.jones.a, self.jones.b, Complex64::new(0.0, 0.0)]
    }

    /// `ψ` and `q = ∇ψ/ψ`.
    fn psi(&self, p: [f64; 4]) -> (Complex64, CVec3) {
        let s2 = self.width * self.width;
        let rho = [
            p[1] - self.center[0],
            p[2] - self.center[1],
            p[3] - self.center[2] - p[0],
        ];
        let env = (-dot(rho, rho) / s2).exp();
        let psi = Complex64::from_polar(self.amplitude * env, self.k * (p[3] - p[0]));
        let q = [
            Complex64::new(-2.0 * rho[0] / s2, 0.0),
            Complex64::new(-2.0 * rho[1] / s2, 0.0),
            Complex64::new(-2.0 * rho[2] / s2, self.k),
        ];
        (psi, q)
    }

    fn potential(&self, p: [f64; 4]) -> [f64; 4] {
        let (psi, q) = self.psi(p);
        let a = cscale(ccross(q, self.moment()), psi);
        [0.0, a[0].re, a[1].re, a[2].re]
    }

    /// Closed-form `(E, B)`: `E = ∂_z A`, `B = ∇ × A`.
    fn fields(&self, p: [f64; 4]) -> (Vec3, Vec3) {
        let (psi, q) = self.psi(p);
        let s2 = self.width * self.width;
        let m = self.moment();
        // d[i] = ∂_i Ã
        let d: [CVec3; 3] = std::array::from_fn(|i| {
            let hess: CVec3 = std::array::from_fn(|b| {
                let delta = if i == b { 2.0 / s2 } else { 0.0 };
                psi * (q[i] * q[b] - delta)
            });
            ccross(hess, m)
        });
        let e = re(d[2]);
        let b = [
            (d[1][2] - d[2][1]).re,
            (d[2][0] - d[0][2]).re,
            (d[0][1] - d[1][0]).re,
        ];
        (e, b)
    }
}

/// Gauge function `χ = χ₀ exp(−|x − x_c|²/w²) cos(k(z − ct))` applied as
/// `φ' = φ − ∂₀χ`, `A' = A + ∇χ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaugeFunction {
    pub amplitude: f64,
    pub width: f64,
    pub center: Vec3,
    pub k: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gauge {
    /// `φ = 0`, `∇·A = 0`.
    Radiation,
    Shifted(GaugeFunction),
}

impl Gauge {
    /// `∂_μχ` with lower index.
    fn gradient(&self, p: [f64; 4]) -> [f64; 4] {
        match self {
            Gauge::Radiation => [0.0; 4],
            Gauge::Shifted(g) => {
                let r = [p[1] - g.center[0], p[2] - g.center[1], p[3] - g.center[2]];
                let env = g.amplitude * (-dot(r, r) / (g.width * g.width)).exp();
                let arg = g.k * (p[3] - p[0]);
                let chi = env * arg.cos();
                let dsin = env * g.k * arg.sin();
                let w2 = g.width * g.width;
                [
                    dsin,
                    -2.0 * r[0] / w2 * chi,
                    -2.0 * r[1] / w2 * chi,
                    -2.0 * r[2] / w2 * chi - dsin,
                ]
            }
        }
    }

    pub fn apply(&self, a: [f64; 4], p: [f64; 4]) -> [f64; 4] {
        let d = self.gradient(p);
        [a[0] - d[0], a[1] + d[1], a[2] + d[2], a[3] + d[3]]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum FieldConfiguration {
    PlaneWave(PlaneWave),
    MagneticMultipole(MagneticMultipole),
    CompactWavePacket(CompactWavePacket),
}

impl FieldConfiguration {
    pub fn name(&self) -> &'static str {
        match self {
            FieldConfiguration::PlaneWave(_) => "plane-wave",
            FieldConfiguration::MagneticMultipole(_) => "magnetic-multipole",
            FieldConfiguration::CompactWavePacket(_) => "compact-wave-packet",
        }
    }

    /// Radiation-gauge `A^μ` at `p`.
    pub fn potential(&self, p: [f64; 4]) -> [f64; 4] {
        match self {
            FieldConfiguration::PlaneWave(w) => w.potential(p),
            FieldConfiguration::MagneticMultipole(w) => w.potential(p),
            FieldConfiguration::CompactWavePacket(w) => w.potential(p),
        }
    }

    pub fn potential_in(&self, gauge: &Gauge, p: [f64; 4]) -> [f64; 4] {
        gauge.apply(self.potential(p), p)
    }

    /// Closed-form `(E, B)` at `p`.
    pub fn fields(&self, p: [f64; 4]) -> (Vec3, Vec3) {
        match self {
            FieldConfiguration::CompactWavePacket(w) => w.fields(p),
            _ => {
                let omega = self.angular_frequency().unwrap_or(0.0);
                let (e, b) = self.complex_fields([p[1], p[2], p[3]]).unwrap_or_default();
                let t = Complex64::from_polar(1.0, -omega * p[0] / SPEED_OF_LIGHT_CGS);
                (re(cscale(e, t)), re(cscale(b, t)))
            }
        }
    }

    /// Complex amplitudes with time factor `e^{−iωt}`, for monochromatic
    /// configurations.
    pub fn complex_fields(&self, x: Vec3) -> Option<(CVec3, CVec3)> {
        match self {
            FieldConfiguration::PlaneWave(w) => Some(w.complex_fields(x)),
            FieldConfiguration::MagneticMultipole(w) => Some(w.complex_fields(x)),
            FieldConfiguration::CompactWavePacket(_) => None,
        }
    }

    pub fn angular_frequency(&self) -> Option<f64> {
        match self {
            FieldConfiguration::PlaneWave(w) => Some(w.omega()),
            FieldConfiguration::MagneticMultipole(w) => Some(w.omega),
            FieldConfiguration::CompactWavePacket(_) => None,
        }
    }
}

impl From<PlaneWave> for FieldConfiguration {
    fn from(w: PlaneWave) -> Self {
        FieldConfiguration::PlaneWave(w)
    }
}

impl From<MagneticMultipole> for FieldConfiguration {
    fn from(w: MagneticMultipole) -> Self {
        FieldConfiguration::MagneticMultipole(w)
    }
}

impl From<CompactWavePacket> for FieldConfiguration {
    fn from(w: CompactWavePacket) -> Self {
        FieldConfiguration::CompactWavePacket(w)
    }
}
