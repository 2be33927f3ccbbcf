//! Numerical substrate: quadrature, peak finding, finite differences,
//! special functions and the seeded random stream.

pub mod diff;
pub mod harmonics;
pub mod optimize;
pub mod quadrature;
pub mod rng;
pub mod sum;

pub use diff::{derivative, laplacian, partial_derivatives, second_derivative, Grid4};
pub use harmonics::{spherical_hankel1, spherical_harmonic};
pub use optimize::{bisect, find_maximum, Maximum};
pub use quadrature::{composite_gauss, gauss_legendre, integrate, Domain, Integral, Quadrature};
pub use rng::{RandomStream, GENERATOR_NAME};
pub use sum::CompensatedSum;
