//! The Segal–Bargmann transform
//!
//! ```text
//! B[g](α) = (Ω/π)^{1/4} ∫ g(ξ) exp((−Ωξ² − α²)/2) exp(s √(2Ω) α ξ) dξ
//! ```
//!
//! per axis, with the three-dimensional transform the product over axes.
//! With `s = +1` the oscillator functions map to `α^l/√(l!)`; with `s = −1`
//! they pick up an extra `(−1)^l`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::quadrature::QuadratureRule;
use super::{GridFunction, TensorSamples};
use crate::constraint::ComplexConstraintVector;
use crate::error::{domain, Result};

/// Largest admissible `|α|`; the kernel grows like `exp(|α|²)`.
pub const ALPHA_GUARD: f64 = 10.0;

/// Sign `s` in the kernel's `exp(s √(2Ω) α ξ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelSign {
    #[default]
    Plus,
    Minus,
}

impl KernelSign {
    pub fn value(self) -> f64 {
        match self {
            KernelSign::Plus => 1.0,
            KernelSign::Minus => -1.0,
        }
    }
}

fn check(alpha: Complex64, omega: f64) -> Result<()> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(domain(format!("spring constant must be positive, got {omega}")));
    }
    if alpha.norm().is_nan() || alpha.norm() > ALPHA_GUARD {
        return Err(domain(format!("|alpha| = {} exceeds the guard {ALPHA_GUARD}", alpha.norm())));
    }
    Ok(())
}

/// Kernel as a function of `y = √Ω ξ`, including `(Ω/π)^{1/4}`.
fn kernel(alpha: Complex64, y: f64, omega: f64, sign: KernelSign) -> Complex64 {
    let exponent = -alpha * alpha * 0.5 + alpha * (sign.value() * 2f64.sqrt() * y) - 0.5 * y * y;
    exponent.exp() * (omega / PI).powf(0.25)
}

/// One-dimensional transform of `g` at `alpha`.
pub fn bargmann_transform(
    g: impl Fn(f64) -> Complex64,
    alpha: Complex64,
    omega: f64,
    rule: &QuadratureRule,
    sign: KernelSign,
) -> Result<Complex64> {
    check(alpha, omega)?;
    let s = omega.sqrt();
    let (pts, w) = rule.scaled_points(s);
    Ok(pts
        .iter()
        .zip(&w)
        .map(|(&xi, &wk)| g(xi) * kernel(alpha, xi * s, omega, sign) * wk)
        .sum())
}

/// Three-dimensional transform of `g` at `alpha` by tensor quadrature.
pub fn bargmann_transform_3d(
    g: impl GridFunction,
    alpha: &ComplexConstraintVector,
    omega: f64,
    rule: &QuadratureRule,
    sign: KernelSign,
) -> Result<Complex64> {
    Ok(bargmann_transform_3d_many(g, std::slice::from_ref(alpha), omega, rule, sign)?[0])
}

/// Three-dimensional transform at several α, sampling `g` once.
pub fn bargmann_transform_3d_many(
    g: impl GridFunction,
    alphas: &[ComplexConstraintVector],
    omega: f64,
    rule: &QuadratureRule,
    sign: KernelSign,
) -> Result<Vec<Complex64>> {
    for a in alphas {
        for c in a.0 {
            check(c, omega)?;
        }
    }
    let s = omega.sqrt();
    let samples = TensorSamples::sample(rule, s, g);
    let n = samples.points().len();
    Ok(alphas
        .iter()
        .map(|alpha| {
            // Per-axis kernel rows, then the weighted triple sum.
            let rows: Vec<Vec<Complex64>> = (0..3)
                .map(|axis| samples.points().iter().map(|&xi| kernel(alpha.0[axis], xi * s, omega, sign)).collect())
                .collect();
            let w: Vec<f64> = rule.scaled_points(s).1;
            let v = samples.values();
            let mut total = Complex64::new(0.0, 0.0);
            for a in 0..n {
                for b in 0..n {
                    let row = &v[(a * n + b) * n..(a * n + b + 1) * n];
                    let inner: Complex64 = row
                        .iter()
                        .zip(&rows[2])
                        .zip(&w)
                        .map(|((val, k), wk)| val * k * *wk)
                        .sum();
                    total += inner * rows[0][a] * rows[1][b] * (w[a] * w[b]);
                }
            }
            total
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillator::hermite::ln_factorial;
    use crate::oscillator::{phi_1d, OscillatorState, QuantumNumbers};
    use crate::transforms::gauss_hermite;

    fn monomial(alpha: Complex64, l: u32) -> Complex64 {
        alpha.powu(l) * (-0.5 * ln_factorial(l)).exp()
    }

    #[test]
    fn monomials_with_plus_sign() {
        let rule = gauss_hermite(32).unwrap();
        let omega = 1.7;
        for l in 0..=8 {
            for &alpha in &[Complex64::new(0.8, -0.3), Complex64::new(-1.5, 1.5), Complex64::new(0.0, 0.0)] {
                let got =
                    bargmann_transform(|xi| Complex64::new(phi_1d(l, omega, xi).unwrap(), 0.0), alpha, omega, &rule, KernelSign::Plus)
                        .unwrap();
                let want = monomial(alpha, l);
                assert!((got - want).norm() < 1e-10, "l={l} alpha={alpha}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn minus_sign_flips_odd_levels() {
        let rule = gauss_hermite(32).unwrap();
        let alpha = Complex64::new(0.6, 0.2);
        let got = bargmann_transform(|xi| Complex64::new(phi_1d(3, 1.0, xi).unwrap(), 0.0), alpha, 1.0, &rule, KernelSign::Minus)
            .unwrap();
        assert!((got + monomial(alpha, 3)).norm() < 1e-10);
    }

    #[test]
    fn guard_and_3d() {
        let rule = gauss_hermite(24).unwrap();
        assert!(bargmann_transform(|_| Complex64::new(1.0, 0.0), Complex64::new(11.0, 0.0), 1.0, &rule, KernelSign::Plus).is_err());
        let s = OscillatorState::new(QuantumNumbers::new(1, 0, 2).unwrap(), 0.9, 1.0, 1.0, [0.0; 3]).unwrap();
        let alpha = ComplexConstraintVector([Complex64::new(0.4, 0.1), Complex64::new(-0.2, 0.0), Complex64::new(0.3, -0.7)]);
        let got = bargmann_transform_3d(|xi: &crate::constraint::ConstraintVector| Complex64::new(s.internal_position(xi), 0.0), &alpha, 0.9, &rule, KernelSign::Plus)
            .unwrap();
        assert!((got - s.internal_bargmann(&alpha)).norm() < 1e-10);
    }
}
