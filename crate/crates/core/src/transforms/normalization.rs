//! Normalization and overlap integrals over d³ξ.

use serde::{Deserialize, Serialize};

use super::quadrature::QuadratureRule;
use super::required_normalization_order;
use crate::error::{Error, Result};
use crate::oscillator::{phi_1d, OscillatorState};

fn phi(l: u32, omega: f64, xi: f64) -> f64 {
    phi_1d(l, omega, xi).expect("validated state")
}

/// A quadrature result together with the order check that qualifies it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizationResult {
    pub value: f64,
    pub order: usize,
    pub required_order: usize,
    pub insufficient_order: bool,
}

impl NormalizationResult {
    fn new(value: f64, order: usize, required_order: usize) -> Self {
        NormalizationResult {
            value,
            order,
            required_order,
            insufficient_order: order < required_order,
        }
    }
}

/// Tensor-product quadrature of `Π_i f_i(ξ_i)`, summed one axis at a time.
fn separable(rule: &QuadratureRule, scale: f64, f: impl Fn(usize, f64) -> f64) -> f64 {
    (0..3).map(|axis| rule.integrate_scaled(scale, |xi| f(axis, xi))).product()
}

/// `∫ |ψ|² d³ξ`. The CM phase has unit modulus and drops out.
pub fn normalization_integral(state: &OscillatorState, rule: &QuadratureRule) -> NormalizationResult {
    let omega = state.omega();
    let l = state.quanta().as_array();
    let value = separable(rule, omega.sqrt(), |axis, xi| phi(l[axis], omega, xi).powi(2));
    NormalizationResult::new(value, rule.order(), required_normalization_order(state.n()))
}

/// `∫ φ_a φ_b d³ξ` for two states sharing a spring constant.
pub fn overlap(a: &OscillatorState, b: &OscillatorState, rule: &QuadratureRule) -> Result<NormalizationResult> {
    if a.omega() != b.omega() {
        return Err(Error::Precondition(format!(
            "overlap needs equal spring constants, got {} and {}",
            a.omega(),
            b.omega()
        )));
    }
    let omega = a.omega();
    let (la, lb) = (a.quanta().as_array(), b.quanta().as_array());
    let value = separable(rule, omega.sqrt(), |axis, xi| phi(la[axis], omega, xi) * phi(lb[axis], omega, xi));
    Ok(NormalizationResult::new(
        value,
        rule.order(),
        required_normalization_order(a.n().max(b.n())),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillator::QuantumNumbers;
    use crate::transforms::gauss_hermite;

    fn state(l: [u32; 3]) -> OscillatorState {
        OscillatorState::new(QuantumNumbers::new(l[0], l[1], l[2]).unwrap(), 1.2, 1.0, 2.0, [0.3, 0.0, -0.4]).unwrap()
    }

    #[test]
    fn ground_state_order_16() {
        let r = normalization_integral(&state([0, 0, 0]), &gauss_hermite(16).unwrap());
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!(!r.insufficient_order);
    }

    #[test]
    fn orthogonality_and_flag() {
        let rule = gauss_hermite(32).unwrap();
        let o = overlap(&state([2, 1, 0]), &state([0, 1, 2]), &rule).unwrap();
        assert!(o.value.abs() < 1e-10);
        let low = normalization_integral(&state([3, 2, 1]), &gauss_hermite(6).unwrap());
        assert!(low.insufficient_order);
        assert_eq!(low.required_order, 8);
    }
}
