//! Raising and lowering operators.
//!
//! In constraint coordinates `α̂_i^± = (∓∂/∂ξ_i + Ω ξ_i)/sqrt(2Ω)`, so
//! `α̂_i^− φ_l = sqrt(l) φ_{l−1}` and `α̂_i^+ φ_l = sqrt(l+1) φ_{l+1}`.
//! The same operators are available in explicit four-space form and as a
//! linear combination of four-dimensional ladder operators; both act on the
//! internal factor `φ(ξ(x))` of a wavefunction.
//!
//! Derivatives `∂/∂x_μ` with a lower index are taken with respect to the
//! covariant coordinates, `∂/∂x_4 = −∂/∂x^4`; gradients handed in hold
//! `∂ψ/∂x^μ` over the stored components.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{InternalField, OscillatorState, QuantumNumbers};
use crate::constraint::{alpha_from_a, Axis};
use crate::error::{domain, Result};
use crate::finite_diff::{DerivativeSupplier, Field4};
use crate::minkowski::{BoundSystem, ComplexFourVector, FourVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LadderDirection {
    Raise,
    Lower,
}

impl LadderDirection {
    /// Sign in front of the derivative term: `∓` reads `−` for raising.
    pub fn derivative_sign(self) -> f64 {
        match self {
            LadderDirection::Raise => -1.0,
            LadderDirection::Lower => 1.0,
        }
    }
}

/// Result of applying a ladder operator to an eigenstate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderOutcome {
    pub coefficient: f64,
    /// `None` when lowering an axis already at `l = 0`.
    pub state: Option<OscillatorState>,
}

impl LadderOutcome {
    pub fn is_annihilated(&self) -> bool {
        self.state.is_none()
    }
}

/// Coefficient and resulting eigenstate for `α̂_axis^±` acting on `state`.
///
/// The new state keeps everything but the quantum numbers; its
/// separation constant moves to the new level.
pub fn ladder_apply(direction: LadderDirection, axis: Axis, state: &OscillatorState) -> Result<LadderOutcome> {
    let l = state.quanta().get(axis);
    match direction {
        LadderDirection::Lower if l == 0 => Ok(LadderOutcome {
            coefficient: 0.0,
            state: None,
        }),
        LadderDirection::Lower => Ok(LadderOutcome {
            coefficient: (l as f64).sqrt(),
            state: Some(state.with_quanta(state.quanta().with(axis, l - 1)?)?),
        }),
        LadderDirection::Raise => {
            let raised: QuantumNumbers = state.quanta().with(axis, l + 1)?;
            Ok(LadderOutcome {
                coefficient: (l as f64 + 1.0).sqrt(),
                state: Some(state.with_quanta(raised)?),
            })
        }
    }
}

/// Number-operator eigenvalue `α̂^+ α̂^−` on `axis`, from ladder coefficients.
pub fn number_from_ladders(axis: Axis, state: &OscillatorState) -> Result<f64> {
    let down = ladder_apply(LadderDirection::Lower, axis, state)?;
    match down.state {
        None => Ok(0.0),
        Some(lowered) => {
            let up = ladder_apply(LadderDirection::Raise, axis, &lowered)?;
            Ok(down.coefficient * up.coefficient)
        }
    }
}

/// Affine form of the explicit operator:
/// `α̂ψ = prefactor · (Σ_μ derivative[μ] ∂ψ/∂x^μ + Σ_μ position[μ] x^μ ψ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExplicitLadderForm {
    pub prefactor: f64,
    pub derivative: [f64; 4],
    pub position: [f64; 4],
}

impl ExplicitLadderForm {
    pub fn apply(&self, x: &FourVector, value: Complex64, grad: &ComplexFourVector) -> Complex64 {
        let d: Complex64 = (0..4).map(|mu| grad.0[mu] * self.derivative[mu]).sum();
        let p: f64 = (0..4).map(|mu| x.0[mu] * self.position[mu]).sum();
        (d + value * p) * self.prefactor
    }
}

/// Coefficients of the four-space operator
/// `(1/sqrt(2Ω)) [∓(∂_i − P_i/(M0+P4) ∂/∂x_4) + Ω x_i + Ω P_i/M0 (P_j x_j/(M0+P4) − x4)]`.
pub fn explicit_ladder_form(direction: LadderDirection, axis: Axis, omega: f64, sys: &BoundSystem) -> ExplicitLadderForm {
    let p = sys.total_momentum().0;
    let m0 = sys.rest_mass();
    let i = axis.index();
    let s = direction.derivative_sign();
    let mut derivative = [0.0; 4];
    derivative[i] = s;
    // ∂/∂x_4 = −∂/∂x^4
    derivative[3] = s * p[i] / (m0 + p[3]);
    let mut position = [0.0; 4];
    for (j, slot) in position.iter_mut().enumerate().take(3) {
        *slot = omega * p[i] * p[j] / (m0 * (m0 + p[3]));
    }
    position[i] += omega;
    position[3] = -omega * p[i] / m0;
    ExplicitLadderForm {
        prefactor: 1.0 / (2.0 * omega).sqrt(),
        derivative,
        position,
    }
}

/// Explicit four-space ladder operator applied pointwise, given `ψ(x)` and `∂ψ/∂x^μ`.
pub fn explicit_ladder(
    direction: LadderDirection,
    axis: Axis,
    omega: f64,
    sys: &BoundSystem,
    x: &FourVector,
    value: Complex64,
    grad: &ComplexFourVector,
) -> Complex64 {
    explicit_ladder_form(direction, axis, omega, sys).apply(x, value, grad)
}

/// Four-dimensional ladder operators applied pointwise:
/// `â^μ ψ = (∓∂ψ/∂x_μ + Ω x^μ ψ)/sqrt(2Ω)`.
pub fn four_d_ladder(
    direction: LadderDirection,
    omega: f64,
    x: &FourVector,
    value: Complex64,
    grad: &ComplexFourVector,
) -> ComplexFourVector {
    let s = direction.derivative_sign();
    let pre = 1.0 / (2.0 * omega).sqrt();
    ComplexFourVector(std::array::from_fn(|mu| {
        let cov = if mu == 3 { -grad.0[mu] } else { grad.0[mu] };
        (cov * s + value * (omega * x.0[mu])) * pre
    }))
}

/// `α̂_i` as the constraint-space image of the four-dimensional ladder
/// operators: `α̂_i = â_i + P_i (P·â − M0 â_4)/(M0 (M0+P4))`.
pub fn ladder_from_four_d(
    direction: LadderDirection,
    axis: Axis,
    omega: f64,
    sys: &BoundSystem,
    x: &FourVector,
    value: Complex64,
    grad: &ComplexFourVector,
) -> Complex64 {
    let a = four_d_ladder(direction, omega, x, value, grad);
    alpha_from_a(&a, sys).0[axis.index()]
}

/// Constraint-coordinate form `(∓∂φ/∂ξ_i + Ω ξ_i φ)/sqrt(2Ω)`.
pub fn internal_ladder(direction: LadderDirection, omega: f64, xi: f64, value: f64, d_dxi: f64) -> f64 {
    (direction.derivative_sign() * d_dxi + omega * xi * value) / (2.0 * omega).sqrt()
}

/// Applies the explicit four-space operator to the internal factor of
/// `state` at `x`, with gradients from `supplier`.
///
/// Equals `coefficient · φ_new(ξ(x))` from [`ladder_apply`].
pub fn ladder_apply_explicit(
    direction: LadderDirection,
    axis: Axis,
    state: &OscillatorState,
    x: &FourVector,
    supplier: &dyn DerivativeSupplier,
) -> Result<Complex64> {
    let field = InternalField(state);
    let grad = supplier.gradient(&field, x)?;
    Ok(explicit_ladder(
        direction,
        axis,
        state.omega(),
        state.system(),
        x,
        field.value(x),
        &grad,
    ))
}

/// Prefactor, derivative and position coefficients of a one-dimensional
/// ladder operator `prefactor · (derivative ∂ + position x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LadderCoefficients {
    pub prefactor: f64,
    pub derivative: f64,
    pub position: f64,
}

/// Coefficients of the explicit operator along its own axis for a system at
/// rest, where it reduces to `(∓∂_i + Ω x_i)/sqrt(2Ω)`.
pub fn rest_frame_ladder_coefficients(direction: LadderDirection, axis: Axis, omega: f64, m1: f64, m2: f64) -> Result<LadderCoefficients> {
    let sigma = super::sigma_n(omega, 0)?;
    let sys = BoundSystem::at_rest(m1, m2, sigma)?;
    let form = explicit_ladder_form(direction, axis, omega, &sys);
    let i = axis.index();
    let off_axis = (0..4)
        .filter(|&mu| mu != i)
        .map(|mu| form.derivative[mu].abs() + form.position[mu].abs())
        .sum::<f64>();
    if off_axis != 0.0 {
        return Err(domain("explicit operator does not decouple in the rest frame"));
    }
    Ok(LadderCoefficients {
        prefactor: form.prefactor,
        derivative: form.derivative[i],
        position: form.position[i],
    })
}

/// Schrödinger ladder operator `(∓∂/∂x + m_r ω x)/sqrt(2 m_r ω)` (ħ = 1).
pub fn schrodinger_ladder_coefficients(direction: LadderDirection, reduced_mass: f64, omega_nr: f64) -> LadderCoefficients {
    let mw = reduced_mass * omega_nr;
    LadderCoefficients {
        prefactor: 1.0 / (2.0 * mw).sqrt(),
        derivative: direction.derivative_sign(),
        position: mw,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraint::xi_from_x;
    use crate::finite_diff::{AnalyticDerivatives, CentralDifferences};

    fn state(l: [u32; 3], v: [f64; 3]) -> OscillatorState {
        OscillatorState::new(QuantumNumbers::new(l[0], l[1], l[2]).unwrap(), 0.9, 1.1, 0.6, v).unwrap()
    }

    #[test]
    fn lower_and_raise_examples() {
        let s = state([1, 0, 0], [0.0; 3]);
        let out = ladder_apply(LadderDirection::Lower, Axis::ALL[0], &s).unwrap();
        assert_eq!(out.coefficient, 1.0);
        assert_eq!(out.state.unwrap().quanta(), QuantumNumbers::GROUND);
        assert_eq!(out.state.unwrap().sigma(), 0.9 * 1.5);

        let g = state([0, 0, 0], [0.0; 3]);
        let out = ladder_apply(LadderDirection::Raise, Axis::ALL[1], &g).unwrap();
        assert_eq!(out.coefficient, 1.0);
        assert_eq!(out.state.unwrap().quanta(), QuantumNumbers::new(0, 1, 0).unwrap());

        let out = ladder_apply(LadderDirection::Lower, Axis::ALL[2], &g).unwrap();
        assert_eq!(out.coefficient, 0.0);
        assert!(out.is_annihilated());
    }

    #[test]
    fn raise_then_lower_gives_number_plus_one() {
        let s = state([3, 1, 2], [0.2, 0.0, 0.1]);
        for axis in Axis::ALL {
            let up = ladder_apply(LadderDirection::Raise, axis, &s).unwrap();
            let down = ladder_apply(LadderDirection::Lower, axis, &up.state.unwrap()).unwrap();
            let product = up.coefficient * down.coefficient;
            assert!((product - (s.quanta().get(axis) + 1) as f64).abs() < 1e-14);
            assert_eq!(down.state.unwrap().quanta(), s.quanta());
            assert!((number_from_ladders(axis, &s).unwrap() - s.quanta().get(axis) as f64).abs() < 1e-14);
        }
    }

    #[test]
    fn raising_past_the_cap_fails() {
        let s = state([64, 0, 0], [0.0; 3]);
        assert!(ladder_apply(LadderDirection::Raise, Axis::ALL[0], &s).is_err());
    }

    #[test]
    fn explicit_matches_eigen_relation_boosted() {
        let s = state([1, 2, 0], [0.3, -0.5, 0.4]);
        let x = FourVector::new(0.4, -0.3, 0.8, 0.2);
        for axis in Axis::ALL {
            for dir in [LadderDirection::Raise, LadderDirection::Lower] {
                let out = ladder_apply(dir, axis, &s).unwrap();
                let expected = out
                    .state
                    .map(|t| out.coefficient * t.internal_position(&xi_from_x(&x, t.system())))
                    .unwrap_or(0.0);
                let analytic = ladder_apply_explicit(dir, axis, &s, &x, &AnalyticDerivatives).unwrap();
                assert!((analytic.re - expected).abs() < 1e-12, "{dir:?} {axis:?}");
                let fd = ladder_apply_explicit(dir, axis, &s, &x, &CentralDifferences::default()).unwrap();
                assert!((fd.re - expected).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn four_d_decomposition_matches_explicit() {
        let s = state([0, 1, 1], [-0.6, 0.2, 0.3]);
        let x = FourVector::new(-0.2, 0.5, 0.1, 0.7);
        let field = InternalField(&s);
        let grad = field.analytic_gradient(&x).unwrap();
        let value = field.value(&x);
        for axis in Axis::ALL {
            for dir in [LadderDirection::Raise, LadderDirection::Lower] {
                let a = explicit_ladder(dir, axis, s.omega(), s.system(), &x, value, &grad);
                let b = ladder_from_four_d(dir, axis, s.omega(), s.system(), &x, value, &grad);
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn rest_frame_collapse_and_nr_form() {
        let omega_nr = 1.7;
        let (m1, m2) = (1.2, 0.8);
        let mr = crate::minkowski::reduced_mass(m1, m2);
        let omega = super::super::nr_spring_constant(mr, omega_nr);
        for dir in [LadderDirection::Raise, LadderDirection::Lower] {
            let rel = rest_frame_ladder_coefficients(dir, Axis::ALL[1], omega, m1, m2).unwrap();
            let nr = schrodinger_ladder_coefficients(dir, mr, omega_nr);
            assert!((rel.prefactor - nr.prefactor).abs() < 1e-12);
            assert_eq!(rel.derivative, nr.derivative);
            assert!((rel.position - nr.position).abs() < 1e-12);
        }
    }

    #[test]
    fn internal_form_lowers_ground_to_zero() {
        let omega = 1.4;
        for &xi in &[-1.0, 0.0, 0.6] {
            let (v, d, _) = super::super::phi_1d_derivatives(0, omega, xi).unwrap();
            assert!(internal_ladder(LadderDirection::Lower, omega, xi, v, d).abs() < 1e-15);
        }
    }
}
