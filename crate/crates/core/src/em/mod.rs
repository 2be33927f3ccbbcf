//! Electromagnetic configurations and checks of the energy-momentum,
//! spin and angular-momentum identities. Gaussian units.

pub mod config;
pub mod force;
pub mod multipole;
pub mod tensor;
pub mod vector;
pub mod volume;

pub use config::{
    vector_spherical_harmonic, CompactWavePacket, FieldConfiguration, Gauge, GaugeFunction, Jones,
    MagneticMultipole, PlaneWave,
};
pub use force::{lorentz_force, photon_kinematics, ChargeSquared, PhotonKinematics};
pub use multipole::{multipole_shell_ratio, ShellRatio};
pub use tensor::{
    energy_momentum_densities, fields_at, fields_from_potentials, tensors_at, TensorAtPoint, ETA,
};
pub use vector::{CVec3, Vec3};
pub use volume::{refinement_check, volume_integral_checks, IntegralPair, RefinementReport, VolumeGrid, VolumeReport};
