//! Sampled tables of wavefunctions and transforms along one grid axis.
//!
//! A grid axis is either a constraint-space axis of the chosen
//! representation (`xi1`, `pi2`, `alpha3`), sampled at the four-space
//! point `embed(c e_i)`, or a raw four-space component (`x1`…`x4`,
//! `p1`…`p4`, `a1`…`a4`) with the other components zero.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constraint::{embed, Axis, ComplexConstraintVector, ConstraintVector};
use crate::error::{Error, Result};
use crate::minkowski::{ComplexFourVector, FourVector};
use crate::oscillator::{OscillatorState, Representation};
use crate::transforms::{
    bargmann_transform_3d_many, fourier_forward, gauss_hermite, position_product, required_transform_order, KernelSign,
};

/// Which coordinate a grid runs along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridAxis {
    Constraint(Axis),
    /// Zero-based four-space component.
    FourSpace(usize),
}

const CONSTRAINT_PREFIXES: [&str; 3] = ["xi", "pi", "alpha"];
const FOUR_SPACE_PREFIXES: [&str; 3] = ["x", "p", "a"];

impl FromStr for GridAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("unknown grid axis `{s}` (expected xi1..xi3, pi1..pi3, alpha1..alpha3, x1..x4, p1..p4 or a1..a4)"));
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (prefix, digits) = s.split_at(split);
        let k: usize = digits.parse().map_err(|_| bad())?;
        if CONSTRAINT_PREFIXES.contains(&prefix) && (1..=3).contains(&k) {
            Ok(GridAxis::Constraint(Axis::new(k - 1)?))
        } else if FOUR_SPACE_PREFIXES.contains(&prefix) && (1..=4).contains(&k) {
            Ok(GridAxis::FourSpace(k - 1))
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for GridAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridAxis::Constraint(a) => write!(f, "c{}", a.index() + 1),
            GridAxis::FourSpace(mu) => write!(f, "w{}", mu + 1),
        }
    }
}

/// Evenly spaced samples of one axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub axis: String,
    pub min: f64,
    pub max: f64,
    pub samples: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            axis: "xi1".into(),
            min: -4.0,
            max: 4.0,
            samples: 81,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<GridAxis> {
        if self.samples < 2 {
            return Err(Error::Domain(format!("grid needs at least 2 samples, got {}", self.samples)));
        }
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(Error::Domain(format!("grid range [{}, {}] must be finite and increasing", self.min, self.max)));
        }
        self.axis.parse()
    }

    /// The sample values, endpoints included.
    pub fn values(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let step = (self.max - self.min) / (self.samples - 1) as f64;
        Ok((0..self.samples)
            .map(|k| if k + 1 == self.samples { self.max } else { self.min + step * k as f64 })
            .collect())
    }

    /// Real four-space points of the grid for `state`'s frame.
    pub fn points(&self, state: &OscillatorState) -> Result<Vec<(f64, FourVector)>> {
        let axis = self.validate()?;
        Ok(self
            .values()?
            .into_iter()
            .map(|c| {
                let point = match axis {
                    GridAxis::Constraint(a) => {
                        let mut v = [0.0; 3];
                        v[a.index()] = c;
                        embed(&ConstraintVector(v), state.system())
                    }
                    GridAxis::FourSpace(mu) => FourVector::unit(mu) * c,
                };
                (c, point)
            })
            .collect())
    }
}

/// One sample of ψ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalRow {
    pub coordinate: f64,
    pub point: [f64; 4],
    pub coords: [f64; 3],
    pub re: f64,
    pub im: f64,
    pub abs2: f64,
}

/// ψ of `state` in `representation` along `grid`, CM position at the origin.
pub fn eval_grid(state: &OscillatorState, representation: &dyn Representation, grid: &GridSpec) -> Result<Vec<EvalRow>> {
    grid.points(state)?
        .into_iter()
        .map(|(c, x)| {
            let point = ComplexFourVector::from_real(&x);
            let coords = representation.coordinates(&point, state.system())?;
            let psi = representation.evaluate(state, &point, &FourVector::ZERO)?;
            Ok(EvalRow {
                coordinate: c,
                point: x.0,
                coords: coords.re().0,
                re: psi.re,
                im: psi.im,
                abs2: psi.norm_sqr(),
            })
        })
        .collect()
}

/// Numeric transform of the position function against its closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformRow {
    pub coordinate: f64,
    pub coords: [f64; 3],
    pub numeric_re: f64,
    pub numeric_im: f64,
    pub closed_re: f64,
    pub closed_im: f64,
    pub abs_err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformTable {
    pub representation: String,
    pub order: usize,
    pub required_order: usize,
    pub insufficient_order: bool,
    pub rows: Vec<TransformRow>,
}

/// Transforms the position function of `state` into `representation`
/// (`momentum` by Fourier quadrature, `bargmann` by Segal–Bargmann
/// quadrature) at the grid's constraint coordinates.
pub fn transform_grid(
    state: &OscillatorState,
    representation: &dyn Representation,
    grid: &GridSpec,
    order: usize,
    sign: KernelSign,
) -> Result<TransformTable> {
    let rule = gauss_hermite(order)?;
    let points = grid.points(state)?;
    let targets: Vec<(f64, ComplexConstraintVector)> = points
        .iter()
        .map(|(c, x)| Ok((*c, representation.coordinates(&ComplexFourVector::from_real(x), state.system())?)))
        .collect::<Result<_>>()?;
    let omega = state.omega();
    let numeric = match representation.name() {
        "momentum" => {
            let pis: Vec<ConstraintVector> = targets.iter().map(|(_, t)| t.re()).collect();
            fourier_forward(position_product(state), &pis, &rule, omega)?
        }
        "bargmann" => {
            let alphas: Vec<ComplexConstraintVector> = targets.iter().map(|(_, t)| *t).collect();
            bargmann_transform_3d_many(position_product(state), &alphas, omega, &rule, sign)?
        }
        other => {
            return Err(Error::Domain(format!(
                "transforms map the position function into `momentum` or `bargmann`, not `{other}`"
            )))
        }
    };
    let rows = targets
        .iter()
        .zip(numeric)
        .map(|((c, t), got)| {
            let want: Complex64 = representation.internal(state, t);
            TransformRow {
                coordinate: *c,
                coords: t.re().0,
                numeric_re: got.re,
                numeric_im: got.im,
                closed_re: want.re,
                closed_im: want.im,
                abs_err: (got - want).norm(),
            }
        })
        .collect();
    let required_order = required_transform_order(state.n());
    Ok(TransformTable {
        representation: representation.name().to_string(),
        order,
        required_order,
        insufficient_order: order < required_order,
        rows,
    })
}
