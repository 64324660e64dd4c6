//! Constraint-space coordinates.
//!
//! For a bound system with on-shell total momentum `P` (`P·P = −M0²`) the
//! relative four-vector `w` is mapped to rectangular coordinates on the
//! three-dimensional hyperplane orthogonal to `P`:
//!
//! ```text
//! k_i = w_i + P_i (P·w − M0 w4) / (M0 (M0 + P4))
//! ```
//!
//! which equals the spatial part of `w` seen from the rest frame of the
//! system reached by the canonical boost. Applied to positions this gives ξ,
//! to momenta π and to complex Bargmann points α.
//!
//! Every contraction is a Minkowski product of contravariant representatives,
//! `P·w = P⃗·w⃗ − P4 w4`.
//!
//! Gradients passed in by callers hold derivatives with respect to the stored
//! components, `∂f/∂x^μ`. The derivative with respect to the covariant
//! coordinate `x_μ` differs only in the sign of the fourth entry, and it is
//! that covariant-coordinate derivative that enters the constraint-space
//! derivative formula below.
//!
//! Different observers' constraint axes agree up to a Wigner rotation, so
//! only rotation-invariant combinations (norms, dot products) are frame
//! independent; see [`ConstraintVector::dot`].

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{minkowski_dot, BoundSystem, ComplexFourVector, FourVector};

/// One of the three constraint-space axes (zero-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Axis(usize);

impl Axis {
    pub const ALL: [Axis; 3] = [Axis(0), Axis(1), Axis(2)];

    pub fn new(index: usize) -> Result<Self> {
        if index < 3 {
            Ok(Axis(index))
        } else {
            Err(Error::Domain(format!("axis index {index} is not in 0..3")))
        }
    }

    pub fn index(self) -> usize {
        self.0
    }
}

/// A real constraint-space three-vector (ξ or π).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ConstraintVector(pub [f64; 3]);

impl ConstraintVector {
    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dot(&self, other: &ConstraintVector) -> f64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }
}

/// A complex constraint-space three-vector (Bargmann α).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ComplexConstraintVector(pub [Complex64; 3]);

impl ComplexConstraintVector {
    pub fn re(&self) -> ConstraintVector {
        ConstraintVector(self.0.map(|c| c.re))
    }
}

// Shared by the real and complex maps; P is always real.
fn constraint_map<T>(w: [T; 4], sys: &BoundSystem) -> [T; 3]
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    let p = sys.total_momentum().0;
    let m0 = sys.rest_mass();
    let p_dot_w = w[0] * p[0] + w[1] * p[1] + w[2] * p[2] - w[3] * p[3];
    let bracket = p_dot_w - w[3] * m0;
    let denom = m0 * (m0 + p[3]);
    std::array::from_fn(|i| w[i] + bracket * (p[i] / denom))
}

/// ξ_i for a relative position `x`.
pub fn xi_from_x(x: &FourVector, sys: &BoundSystem) -> ConstraintVector {
    ConstraintVector(constraint_map(x.0, sys))
}

/// π_i for a relative momentum `p`.
pub fn pi_from_p(p: &FourVector, sys: &BoundSystem) -> ConstraintVector {
    ConstraintVector(constraint_map(p.0, sys))
}

/// α_i for a point `a` of Bargmann 4-space.
pub fn alpha_from_a(a: &ComplexFourVector, sys: &BoundSystem) -> ComplexConstraintVector {
    ComplexConstraintVector(constraint_map(a.0, sys))
}

/// `w·w + M0⁻² (P·w)²`, the frame-independent squared length of the
/// constraint-space image of `w`.
pub fn invariant_norm(w: &FourVector, sys: &BoundSystem) -> f64 {
    let p = sys.total_momentum();
    let m0 = sys.rest_mass();
    let pw = p.dot(w);
    w.dot(w) + pw * pw / (m0 * m0)
}

/// `∂ξ_i/∂x^μ` as rows `i`, columns `μ` over the stored components.
pub fn xi_jacobian(sys: &BoundSystem) -> [[f64; 4]; 3] {
    let p = sys.total_momentum().0;
    let m0 = sys.rest_mass();
    let c = 1.0 / (m0 * (m0 + p[3]));
    std::array::from_fn(|i| {
        [
            f64::from(u8::from(i == 0)) + p[i] * p[0] * c,
            f64::from(u8::from(i == 1)) + p[i] * p[1] * c,
            f64::from(u8::from(i == 2)) + p[i] * p[2] * c,
            -p[i] / m0,
        ]
    })
}

/// Four-space directions `e_i` spanning the constraint hyperplane with
/// `ξ_j(e_i) = δ_ij` and `P·e_i = 0`.
///
/// Moving a point by `t e_i` changes `ξ_i` by `t` and leaves the other
/// coordinates alone, so directional derivatives along `e_i` are `∂/∂ξ_i`.
pub fn constraint_basis(sys: &BoundSystem) -> [FourVector; 3] {
    let p = sys.total_momentum().0;
    let m0 = sys.rest_mass();
    let c = 1.0 / (m0 * (m0 + p[3]));
    std::array::from_fn(|i| {
        FourVector::new(
            f64::from(u8::from(i == 0)) + p[i] * p[0] * c,
            f64::from(u8::from(i == 1)) + p[i] * p[1] * c,
            f64::from(u8::from(i == 2)) + p[i] * p[2] * c,
            p[i] / m0,
        )
    })
}

/// The point on the hyperplane `P·x = 0` whose constraint coordinates are `xi`.
pub fn embed(xi: &ConstraintVector, sys: &BoundSystem) -> FourVector {
    let basis = constraint_basis(sys);
    basis[0] * xi.0[0] + basis[1] * xi.0[1] + basis[2] * xi.0[2]
}

fn directional<T>(grad: [T; 4], axis: Axis, sys: &BoundSystem) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    let p = sys.total_momentum().0;
    let m0 = sys.rest_mass();
    let i = axis.index();
    // Derivatives with respect to the covariant coordinates x_μ.
    let cov = [grad[0], grad[1], grad[2], grad[3] * -1.0];
    let p_dot_cov = cov[0] * p[0] + cov[1] * p[1] + cov[2] * p[2] - cov[3] * p[3];
    grad[i] + (p_dot_cov * (1.0 / m0) - cov[3]) * (p[i] / (m0 + p[3]))
}

/// `∂f/∂ξ_i` from the four-gradient `g_μ = ∂f/∂x^μ` of a scalar field.
///
/// With `d = (g1, g2, g3, −g4)` the derivatives with respect to the covariant
/// coordinates, the result is `g_i + P_i/(M0+P4) · (P·d / M0 − d4)`.
pub fn xi_directional_derivative(grad: &FourVector, axis: Axis, sys: &BoundSystem) -> f64 {
    directional(grad.0, axis, sys)
}

/// Complex-valued counterpart of [`xi_directional_derivative`].
pub fn xi_directional_derivative_complex(
    grad: &ComplexFourVector,
    axis: Axis,
    sys: &BoundSystem,
) -> Complex64 {
    directional(grad.0, axis, sys)
}

/// Constraint-space Laplacian `Σ_i ∂²f/∂ξ_i²` from four-space second derivatives.
///
/// `d_alembertian` is `Σ_μ η^μμ ∂²f/∂x^μ²` and `second_along_four_velocity`
/// is the second derivative along `u = P/M0`. The spatial rest-frame axes and
/// `u` form an orthonormal tetrad, so `Σ_i ∂²/∂ξ_i² = □ + (u·∂)²`. For fields
/// of `x_⊥` alone the second term vanishes.
pub fn xi_laplacian(d_alembertian: f64, second_along_four_velocity: f64) -> f64 {
    d_alembertian + second_along_four_velocity
}

/// `P·w_⊥` for the perpendicular projection, for orthogonality checks.
pub fn projection_defect(w_perp: &FourVector, sys: &BoundSystem) -> f64 {
    minkowski_dot(&sys.total_momentum(), w_perp)
}
