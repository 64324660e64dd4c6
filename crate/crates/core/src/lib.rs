//! Relativistic quantum constraint mechanics for two spinless particles.
//!
//! The crate is organised bottom-up:
//!
//! * [`minkowski`]: four-vectors in the (+,+,+,−) metric with boosts and
//!   two-body kinematics.
//! * [`constraint`]: the Lorentz-invariant constraint-space coordinates
//!   and their derivative.
//! * [`oscillator`]: the relativistic 3D harmonic oscillator and its ladder
//!   operators.
//! * [`transforms`]: Gauss–Hermite quadrature with the Fourier and
//!   Segal–Bargmann transforms built on it.
//! * [`verify`]: seeded property suites that emit JSON reports.
//!
//! Strategies picked by name at runtime are trait objects held in
//! [`registry::Registry`] instances.
//!
//! Natural units (c = ħ = 1) are used throughout.

pub mod constraint;
pub mod error;
pub mod finite_diff;
pub mod minkowski;
pub mod oscillator;
pub mod registry;
pub mod tabulate;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
