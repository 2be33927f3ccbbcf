//! Angular-momentum four-tensor of a particle ensemble.

use serde::Serialize;

use crate::constants::SPEED_OF_LIGHT;
use crate::em::vector::{add, norm, scale, Vec3};
use crate::error::{Error, Result};

/// Relative slack in the energy-momentum relation.
const SHELL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Particle {
    /// m
    pub position: Vec3,
    /// kg·m/s
    pub momentum: Vec3,
    /// J
    pub energy: f64,
    /// kg; `None` for massless particles.
    pub mass: Option<f64>,
}

impl Particle {
    pub fn photon(position: Vec3, momentum: Vec3) -> Self {
        Particle {
            position,
            momentum,
            energy: norm(momentum) * SPEED_OF_LIGHT,
            mass: None,
        }
    }

    pub fn massive(position: Vec3, momentum: Vec3, mass: f64) -> Self {
        let pc = norm(momentum) * SPEED_OF_LIGHT;
        let mc2 = mass * SPEED_OF_LIGHT * SPEED_OF_LIGHT;
        Particle {
            position,
            momentum,
            energy: pc.hypot(mc2),
            mass: Some(mass),
        }
    }

    /// `pc²/E`
    pub fn velocity(&self) -> Vec3 {
        scale(self.momentum, SPEED_OF_LIGHT * SPEED_OF_LIGHT / self.energy)
    }

    fn check(&self) -> Result<()> {
        let pc = norm(self.momentum) * SPEED_OF_LIGHT;
        if !(self.energy >= 0.0 && self.energy.is_finite()) {
            return Err(Error::domain(format!("particle energy must be finite and >= 0, got {}", self.energy)));
        }
        match self.mass {
            None if self.energy < pc * (1.0 - SHELL_TOLERANCE) => Err(Error::domain(format!(
                "massless particle energy {:e} J is below |p|c = {pc:e} J",
                self.energy
            ))),
            Some(m) => {
                let mc2 = m * SPEED_OF_LIGHT * SPEED_OF_LIGHT;
                let shell = pc.hypot(mc2);
                if m < 0.0 || (self.energy - shell).abs() > SHELL_TOLERANCE * shell.max(self.energy) {
                    Err(Error::domain(format!(
                        "particle energy {:e} J is off the mass shell {shell:e} J",
                        self.energy
                    )))
                } else {
                    Ok(())
                }
            }
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParticleEnsemble {
    pub particles: Vec<Particle>,
    /// s
    pub time: f64,
}

impl ParticleEnsemble {
    pub fn new(particles: Vec<Particle>, time: f64) -> Self {
        ParticleEnsemble { particles, time }
    }

    /// Straight-line motion for `dt`.
    pub fn advance(&self, dt: f64) -> Self {
        let particles = self
            .particles
            .iter()
            .map(|p| Particle {
                position: add(p.position, scale(p.velocity(), dt)),
                ..*p
            })
            .collect();
        ParticleEnsemble {
            particles,
            time: self.time + dt,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AngularTensor {
    /// `M^{μν}`, J·s.
    pub components: [[f64; 4]; 4],
    /// `M^{0i} = cΣ(t pⁱ − E xⁱ/c²)`
    pub boost: Vec3,
    /// `(M^{23}, M^{31}, M^{12}) = Σ r × p`
    pub angular: Vec3,
}

/// `M^{μν} = Σ(x^μ p^ν − x^ν p^μ)` with `x⁰ = ct`, `p⁰ = E/c`.
pub fn ensemble_angular_tensor(ens: &ParticleEnsemble) -> Result<AngularTensor> {
    let mut m = [[0.0; 4]; 4];
    for p in &ens.particles {
        p.check()?;
        let x = [SPEED_OF_LIGHT * ens.time, p.position[0], p.position[1], p.position[2]];
        let q = [p.energy / SPEED_OF_LIGHT, p.momentum[0], p.momentum[1], p.momentum[2]];
        for mu in 0..4 {
            for nu in mu + 1..4 {
                m[mu][nu] += x[mu] * q[nu] - x[nu] * q[mu];
            }
        }
    }
    for mu in 0..4 {
        for nu in 0..mu {
            m[mu][nu] = -m[nu][mu];
        }
    }
    Ok(AngularTensor {
        boost: [m[0][1], m[0][2], m[0][3]],
        angular: [m[2][3], m[3][1], m[1][2]],
        components: m,
    })
}

/// `cΣ(t p − E r/c²)`, the closed form of the boost block.
pub fn boost_closed_form(ens: &ParticleEnsemble) -> Vec3 {
    let c = SPEED_OF_LIGHT;
    ens.particles.iter().fold([0.0; 3], |acc, p| {
        add(acc, scale(add(scale(p.momentum, ens.time), scale(p.position, -p.energy / (c * c))), c))
    })
}

/// `Σ E`, `Σ p`: the conserved four-momentum that accompanies the tensor.
pub fn total_four_momentum(ens: &ParticleEnsemble) -> [f64; 4] {
    ens.particles.iter().fold([0.0; 4], |acc, p| {
        [acc[0] + p.energy / SPEED_OF_LIGHT, acc[1] + p.momentum[0], acc[2] + p.momentum[1], acc[3] + p.momentum[2]]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::em::vector::cross;
    use crate::numerics::RandomStream;

    fn max_abs(m: &[[f64; 4]; 4]) -> f64 {
        m.iter().flatten().fold(0.0, |a, x| a.max(x.abs()))
    }

    #[test]
    fn particle_at_origin() {
        let e = ParticleEnsemble::new(vec![Particle::photon([0.0; 3], [1e-27, 2e-27, 0.0])], 0.0);
        let t = ensemble_angular_tensor(&e).unwrap();
        assert_eq!(t.components, [[0.0; 4]; 4]);
    }

    #[test]
    fn opposite_pair() {
        let r = [1e-9, 2e-9, -0.5e-9];
        let p = [3e-27, -1e-27, 2e-27];
        let e = ParticleEnsemble::new(
            vec![Particle::photon(r, p), Particle::photon(scale(r, -1.0), scale(p, -1.0))],
            0.0,
        );
        let t = ensemble_angular_tensor(&e).unwrap();
        let l = cross(r, p);
        for i in 0..3 {
            assert!((t.angular[i] - 2.0 * l[i]).abs() < 1e-15 * norm(l));
        }
        assert!(norm(t.boost) < 1e-50);
    }

    #[test]
    fn antisymmetric_and_conserved() {
        let mut rng = RandomStream::new(23);
        let mut v = || 2.0 * rng.uniform() - 1.0;
        let particles: Vec<Particle> = (0..12)
            .map(|i| {
                let r = [v(), v(), v()];
                let p = [v() * 1e-27, v() * 1e-27, v() * 1e-27];
                if i % 3 == 0 {
                    Particle::massive(r, p, 1e-35)
                } else {
                    Particle::photon(r, p)
                }
            })
            .collect();
        let e0 = ParticleEnsemble::new(particles, 0.0);
        let m0 = ensemble_angular_tensor(&e0).unwrap();
        let scale0 = max_abs(&m0.components);
        for mu in 0..4 {
            for nu in 0..4 {
                assert_eq!(m0.components[mu][nu], -m0.components[nu][mu]);
            }
        }
        let closed = boost_closed_form(&e0);
        for i in 0..3 {
            assert!((closed[i] - m0.boost[i]).abs() < 1e-12 * scale0);
        }
        for dt in [1e-9, 3e-8, 1e-6] {
            let e = e0.advance(dt);
            let m = ensemble_angular_tensor(&e).unwrap();
            for mu in 0..4 {
                for nu in 0..4 {
                    assert!((m.components[mu][nu] - m0.components[mu][nu]).abs() < 1e-12 * scale0 * (1.0 + dt * 3e8));
                }
            }
            assert_eq!(total_four_momentum(&e), total_four_momentum(&e0));
        }
    }

    #[test]
    fn energy_consistency() {
        let bad = Particle {
            position: [0.0; 3],
            momentum: [1e-27, 0.0, 0.0],
            energy: 1e-20,
            mass: None,
        };
        assert!(ensemble_angular_tensor(&ParticleEnsemble::new(vec![bad], 0.0)).is_err());
        let off_shell = Particle {
            energy: 1.0,
            ..Particle::massive([0.0; 3], [0.0; 3], 1e-30)
        };
        assert!(ensemble_angular_tensor(&ParticleEnsemble::new(vec![off_shell], 0.0)).is_err());
    }
}
