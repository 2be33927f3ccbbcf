//! Metropolis photon gas exchanging quanta with a heat bath at zero chemical
//! potential.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::constants::{BOLTZMANN, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::numerics::{RandomStream, GENERATOR_NAME};
use crate::spectral::{Spectrum, SpectrumSample};
use crate::statistics::QuantumHypothesis;

/// Batches used for standard errors.
pub const BATCHES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mode {
    /// Hz
    pub nu: f64,
    /// Modes per `4πν²/c³` of phase space.
    pub degeneracy: u32,
    pub occupancy: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Up,
    Down,
}

/// What a single Metropolis proposal did.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepOutcome {
    pub mode: usize,
    pub direction: Direction,
    /// Occupancy before the proposal.
    pub from: u64,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeGasState {
    modes: Vec<Mode>,
    temperature: f64,
    hypothesis: QuantumHypothesis,
    rng: RandomStream,
    up_acceptance: Vec<f64>,
    sweeps: u64,
}

impl ModeGasState {
    /// Empty modes at `frequencies`, each with the hypothesis' multiplicity
    /// as degeneracy.
    pub fn new(frequencies: &[f64], temperature: f64, hypothesis: QuantumHypothesis, seed: u64) -> Result<Self> {
        let degeneracy = hypothesis.mode_density().multiplicity as u32;
        let modes = frequencies
            .iter()
            .map(|&nu| Mode {
                nu,
                degeneracy,
                occupancy: 0,
            })
            .collect();
        Self::with_modes(modes, temperature, hypothesis, seed)
    }

    pub fn with_modes(modes: Vec<Mode>, temperature: f64, hypothesis: QuantumHypothesis, seed: u64) -> Result<Self> {
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::domain(format!("temperature must be positive, got {temperature}")));
        }
        let mut up_acceptance = Vec::with_capacity(modes.len());
        for m in &modes {
            if !(m.nu > 0.0 && m.nu.is_finite()) {
                return Err(Error::domain(format!("mode frequency must be positive, got {}", m.nu)));
            }
            if m.degeneracy == 0 {
                return Err(Error::argument("mode degeneracy must be at least 1"));
            }
            let eps = hypothesis.entity_energy(m.nu).ok_or_else(|| {
                Error::Unsupported("the equipartition hypothesis has no quanta to exchange".into())
            })?;
            up_acceptance.push((-eps / (BOLTZMANN * temperature)).exp());
        }
        Ok(ModeGasState {
            modes,
            temperature,
            hypothesis,
            rng: RandomStream::new(seed),
            up_acceptance,
            sweeps: 0,
        })
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn hypothesis(&self) -> QuantumHypothesis {
        self.hypothesis
    }

    pub fn seed(&self) -> u64 {
        self.rng.seed()
    }

    pub fn sweeps(&self) -> u64 {
        self.sweeps
    }

    /// `ε/kT` of mode `i`.
    pub fn reduced_energy(&self, i: usize) -> f64 {
        let eps = self.hypothesis.entity_energy(self.modes[i].nu).unwrap_or(0.0);
        eps / (BOLTZMANN * self.temperature)
    }

    /// One proposal: a uniform mode, `Δn = ±1` with equal odds, accepted with
    /// `min(1, e^{−Δε/kT})`. Returns `None` for a gas without modes.
    pub fn step(&mut self) -> Option<StepOutcome> {
        if self.modes.is_empty() {
            return None;
        }
        let mode = self.rng.index(self.modes.len());
        let up = self.rng.next_u64() >> 63 == 1;
        let from = self.modes[mode].occupancy;
        let accepted = if up {
            let ok = self.rng.uniform() < self.up_acceptance[mode];
            if ok {
                self.modes[mode].occupancy += 1;
            }
            ok
        } else if from > 0 {
            self.modes[mode].occupancy -= 1;
            true
        } else {
            false
        };
        Some(StepOutcome {
            mode,
            direction: if up { Direction::Up } else { Direction::Down },
            from,
            accepted,
        })
    }

    /// As many proposals as there are modes.
    pub fn sweep(&mut self) {
        for _ in 0..self.modes.len() {
            self.step();
        }
        self.sweeps += 1;
    }

    /// Advances `sweeps` sweeps, sampling every occupancy after each sweep
    /// past `burn_in`.
    pub fn run(&mut self, sweeps: u64, burn_in: u64) -> Result<OccupancyStats> {
        if sweeps <= burn_in {
            return Err(Error::argument(format!(
                "sweeps ({sweeps}) must exceed burn-in ({burn_in})"
            )));
        }
        let kept = sweeps - burn_in;
        if kept < BATCHES as u64 {
            return Err(Error::argument(format!(
                "need at least {BATCHES} sweeps after burn-in for batch means, got {kept}"
            )));
        }
        for _ in 0..burn_in {
            self.sweep();
        }
        let batch_len = kept / BATCHES as u64;
        let leftover = kept - batch_len * BATCHES as u64;
        for _ in 0..leftover {
            self.sweep();
        }
        let n = self.modes.len();
        let mut batch_means = vec![[0.0f64; BATCHES]; n];
        let mut sums = vec![0u64; n];
        for b in 0..BATCHES {
            sums.iter_mut().for_each(|s| *s = 0);
            for _ in 0..batch_len {
                self.sweep();
                for (s, m) in sums.iter_mut().zip(&self.modes) {
                    *s += m.occupancy;
                }
            }
            for (i, s) in sums.iter().enumerate() {
                batch_means[i][b] = *s as f64 / batch_len as f64;
            }
        }
        let mut mean = Vec::with_capacity(n);
        let mut std_error = Vec::with_capacity(n);
        for bm in &batch_means {
            let m = bm.iter().sum::<f64>() / BATCHES as f64;
            let var = bm.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (BATCHES - 1) as f64;
            mean.push(m);
            std_error.push((var / BATCHES as f64).sqrt());
        }
        Ok(OccupancyStats {
            mean,
            std_error,
            sweeps,
            burn_in,
            samples: batch_len * BATCHES as u64,
            batches: BATCHES,
            seed: self.seed(),
            generator: GENERATOR_NAME,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OccupancyStats {
    pub mean: Vec<f64>,
    pub std_error: Vec<f64>,
    pub sweeps: u64,
    pub burn_in: u64,
    /// Sweeps contributing to the means.
    pub samples: u64,
    pub batches: usize,
    pub seed: u64,
    pub generator: &'static str,
}

/// Independent chains, one per state, run in parallel.
pub fn run_chains(states: &mut [ModeGasState], sweeps: u64, burn_in: u64) -> Vec<Result<OccupancyStats>> {
    states.par_iter_mut().map(|s| s.run(sweeps, burn_in)).collect()
}

/// `u(νᵢ) = density · ε · n̄ᵢ` with the standard error carried through.
pub fn spectrum_estimate(stats: &OccupancyStats, state: &ModeGasState) -> Result<Spectrum> {
    if stats.mean.len() != state.modes.len() {
        return Err(Error::argument(format!(
            "statistics cover {} modes, state has {}",
            stats.mean.len(),
            state.modes.len()
        )));
    }
    let mut order: Vec<usize> = (0..state.modes.len()).collect();
    order.sort_by(|&a, &b| state.modes[a].nu.total_cmp(&state.modes[b].nu));
    let samples = order
        .into_iter()
        .map(|i| {
            let m = state.modes[i];
            let eps = state.hypothesis.entity_energy(m.nu).unwrap_or(0.0);
            let weight = m.degeneracy as f64 * 4.0 * PI * m.nu * m.nu / SPEED_OF_LIGHT.powi(3) * eps;
            SpectrumSample {
                nu: m.nu,
                u: weight * stats.mean[i],
                u_err: Some(weight * stats.std_error[i]),
            }
        })
        .collect();
    Spectrum::new(format!("mc:{}", state.hypothesis.label()), state.temperature, samples)
}
