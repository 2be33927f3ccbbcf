//! Numerical laboratory for black-body spectral laws built from different
//! quantum hypotheses, a Monte Carlo photon gas, and the electromagnetic
//! energy-momentum and angular-momentum identities behind photon spin.

pub mod constants;
pub mod em;
pub mod error;
pub mod gas;
pub mod model;
pub mod numerics;
pub mod spectral;
pub mod statistics;

pub use constants::{SpectralConstants, CONSTANT_SET};
pub use error::{Error, Result};
pub use gas::{ModeGasState, OccupancyStats};
pub use numerics::{Grid4, RandomStream, GENERATOR_NAME};
pub use spectral::{Comparison, Spectrum, SpectrumSample, SpectralLaw};
pub use statistics::{compose_law, ComposedLaw, EntityEnergy, QuantumHypothesis};
