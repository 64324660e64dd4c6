//! Position, momentum and Bargmann representations as named strategies.

use num_complex::Complex64;

use super::OscillatorState;
use crate::constraint::{alpha_from_a, pi_from_p, xi_from_x, ComplexConstraintVector};
use crate::error::{Error, Result};
use crate::minkowski::{BoundSystem, ComplexFourVector, FourVector};
use crate::registry::{Named, Registry};

/// A representation maps a four-space point to constraint coordinates and
/// evaluates the internal wavefunction there.
///
/// Points are complex four-vectors; the real representations reject a
/// non-zero imaginary part.
pub trait Representation: Named + Send + Sync {
    /// Symbol used for the constraint coordinates (`xi`, `pi`, `alpha`).
    fn coordinate_symbol(&self) -> &'static str;

    fn coordinates(&self, point: &ComplexFourVector, sys: &BoundSystem) -> Result<ComplexConstraintVector>;

    fn internal(&self, state: &OscillatorState, coords: &ComplexConstraintVector) -> Complex64;

    /// Full wavefunction, internal factor times `exp(i P·X)`.
    fn evaluate(&self, state: &OscillatorState, point: &ComplexFourVector, cm: &FourVector) -> Result<Complex64> {
        let coords = self.coordinates(point, state.system())?;
        Ok(state.phase(cm) * self.internal(state, &coords))
    }
}

fn real_point(point: &ComplexFourVector, what: &str) -> Result<FourVector> {
    if point.0.iter().any(|c| c.im != 0.0) {
        return Err(Error::Domain(format!("{what} representation takes a real four-vector")));
    }
    Ok(point.re())
}

fn complexify(v: [f64; 3]) -> ComplexConstraintVector {
    ComplexConstraintVector(v.map(|r| Complex64::new(r, 0.0)))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct PositionRepresentation;

impl Named for PositionRepresentation {
    fn name(&self) -> &'static str {
        "position"
    }
}

impl Representation for PositionRepresentation {
    fn coordinate_symbol(&self) -> &'static str {
        "xi"
    }

    fn coordinates(&self, point: &ComplexFourVector, sys: &BoundSystem) -> Result<ComplexConstraintVector> {
        Ok(complexify(xi_from_x(&real_point(point, "position")?, sys).0))
    }

    fn internal(&self, state: &OscillatorState, coords: &ComplexConstraintVector) -> Complex64 {
        Complex64::new(state.internal_position(&coords.re()), 0.0)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct MomentumRepresentation;

impl Named for MomentumRepresentation {
    fn name(&self) -> &'static str {
        "momentum"
    }
}

impl Representation for MomentumRepresentation {
    fn coordinate_symbol(&self) -> &'static str {
        "pi"
    }

    fn coordinates(&self, point: &ComplexFourVector, sys: &BoundSystem) -> Result<ComplexConstraintVector> {
        Ok(complexify(pi_from_p(&real_point(point, "momentum")?, sys).0))
    }

    fn internal(&self, state: &OscillatorState, coords: &ComplexConstraintVector) -> Complex64 {
        Complex64::new(state.internal_momentum(&coords.re()), 0.0)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BargmannRepresentation;

impl Named for BargmannRepresentation {
    fn name(&self) -> &'static str {
        "bargmann"
    }
}

impl Representation for BargmannRepresentation {
    fn coordinate_symbol(&self) -> &'static str {
        "alpha"
    }

    fn coordinates(&self, point: &ComplexFourVector, sys: &BoundSystem) -> Result<ComplexConstraintVector> {
        Ok(alpha_from_a(point, sys))
    }

    fn internal(&self, state: &OscillatorState, coords: &ComplexConstraintVector) -> Complex64 {
        state.internal_bargmann(coords)
    }
}

/// Registry holding `position`, `momentum` and `bargmann`.
pub fn representations() -> Registry<dyn Representation> {
    let mut reg: Registry<dyn Representation> = Registry::new("representation");
    reg.register(Box::new(PositionRepresentation));
    reg.register(Box::new(MomentumRepresentation));
    reg.register(Box::new(BargmannRepresentation));
    reg
}
