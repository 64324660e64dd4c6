//! The Fourier pair between ξ and π constraint spaces,
//!
//! ```text
//! f(π) = (2π)^{−3/2} ∫ g(ξ) exp(−i π·ξ) d³ξ
//! g(ξ) = (2π)^{−3/2} ∫ f(π) exp(+i π·ξ) d³π
//! ```
//!
//! For oscillator states of spring constant Ω, `g` decays like
//! `exp(−Ωξ²/2)` and `f` like `exp(−π²/(2Ω))`, giving node scales
//! `√(Ω/2)` and `1/√(2Ω)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::quadrature::QuadratureRule;
use super::{GridFunction, TensorSamples};
use crate::constraint::ConstraintVector;
use crate::error::{domain, Result};

/// Node scales used for the forward, inverse and squared-modulus integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierScales {
    /// `√(Ω/2)` for `g(ξ)`.
    pub position: f64,
    /// `1/√(2Ω)` for `f(π)`.
    pub momentum: f64,
    /// `√Ω` for `|g(ξ)|²`.
    pub position_density: f64,
    /// `1/√Ω` for `|f(π)|²`.
    pub momentum_density: f64,
}

impl FourierScales {
    pub fn new(omega: f64) -> Result<Self> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(domain(format!("spring constant must be positive, got {omega}")));
        }
        Ok(FourierScales {
            position: (omega / 2.0).sqrt(),
            momentum: 1.0 / (2.0 * omega).sqrt(),
            position_density: omega.sqrt(),
            momentum_density: 1.0 / omega.sqrt(),
        })
    }
}

fn norm_1d() -> f64 {
    (2.0 * PI).powf(-0.5)
}

fn norm_3d() -> f64 {
    (2.0 * PI).powf(-1.5)
}

fn forward_kernel(pi: f64, xi: f64) -> Complex64 {
    Complex64::from_polar(1.0, -pi * xi)
}

fn inverse_kernel(xi: f64, pi: f64) -> Complex64 {
    Complex64::from_polar(1.0, pi * xi)
}

/// Per-axis eigenphase of the forward transform, `φ_l ↦ (−i)^l φ_l`.
pub fn fourier_eigenphase(l: u32) -> Complex64 {
    Complex64::new(0.0, -1.0).powu(l)
}

/// One-dimensional forward transform `(2π)^{−1/2} ∫ g(ξ) exp(−iπξ) dξ`.
pub fn fourier_forward_1d(g: impl Fn(f64) -> Complex64, pi: f64, rule: &QuadratureRule, omega: f64) -> Result<Complex64> {
    let s = FourierScales::new(omega)?.position;
    let (pts, w) = rule.scaled_points(s);
    let sum: Complex64 = pts.iter().zip(&w).map(|(&xi, &wk)| g(xi) * forward_kernel(pi, xi) * wk).sum();
    Ok(sum * norm_1d())
}

/// One-dimensional inverse transform `(2π)^{−1/2} ∫ f(π) exp(+iπξ) dπ`.
pub fn fourier_inverse_1d(f: impl Fn(f64) -> Complex64, xi: f64, rule: &QuadratureRule, omega: f64) -> Result<Complex64> {
    let s = FourierScales::new(omega)?.momentum;
    let (pts, w) = rule.scaled_points(s);
    let sum: Complex64 = pts.iter().zip(&w).map(|(&pi, &wk)| f(pi) * inverse_kernel(xi, pi) * wk).sum();
    Ok(sum * norm_1d())
}

/// Forward transform of `g` at each π in `targets`.
pub fn fourier_forward(
    g: impl GridFunction,
    targets: &[ConstraintVector],
    rule: &QuadratureRule,
    omega: f64,
) -> Result<Vec<Complex64>> {
    let s = FourierScales::new(omega)?.position;
    let samples = TensorSamples::sample(rule, s, g);
    Ok(scale_all(samples.contract_points(targets, forward_kernel), norm_3d()))
}

/// Forward transform on the tensor grid `axis_targets³` (row-major, last
/// axis fastest).
pub fn fourier_forward_grid(
    g: impl GridFunction,
    axis_targets: &[f64],
    rule: &QuadratureRule,
    omega: f64,
) -> Result<Vec<Complex64>> {
    let s = FourierScales::new(omega)?.position;
    let samples = TensorSamples::sample(rule, s, g);
    Ok(scale_all(samples.contract_grid(axis_targets, forward_kernel), norm_3d()))
}

/// Inverse transform of `f` at each ξ in `targets`.
pub fn fourier_inverse(
    f: impl GridFunction,
    targets: &[ConstraintVector],
    rule: &QuadratureRule,
    omega: f64,
) -> Result<Vec<Complex64>> {
    let s = FourierScales::new(omega)?.momentum;
    let samples = TensorSamples::sample(rule, s, f);
    Ok(scale_all(samples.contract_points(targets, inverse_kernel), norm_3d()))
}

/// `inverse(forward(g))` at each ξ in `targets`.
///
/// The forward transform is evaluated on the tensor grid of the inverse
/// rule's π nodes. `forward_rule` samples `g`; `inverse_rule` samples the
/// intermediate momentum function. Use a finer forward rule than inverse rule.
pub fn fourier_round_trip(
    g: impl GridFunction,
    targets: &[ConstraintVector],
    forward_rule: &QuadratureRule,
    inverse_rule: &QuadratureRule,
    omega: f64,
) -> Result<Vec<Complex64>> {
    let scales = FourierScales::new(omega)?;
    let samples = TensorSamples::sample(forward_rule, scales.position, g);
    let (pi_nodes, _) = inverse_rule.scaled_points(scales.momentum);
    let f = scale_all(samples.contract_grid(&pi_nodes, forward_kernel), norm_3d());
    let momentum = TensorSamples::from_values(inverse_rule, scales.momentum, f);
    Ok(scale_all(momentum.contract_points(targets, inverse_kernel), norm_3d()))
}

/// `(∫ |g|² d³ξ, ∫ |f|² d³π)` with `f` the forward transform of `g`
/// evaluated on the π nodes of `momentum_rule`.
pub fn parseval_norms(
    g: impl GridFunction,
    position_rule: &QuadratureRule,
    momentum_rule: &QuadratureRule,
    omega: f64,
) -> Result<(f64, f64)> {
    let scales = FourierScales::new(omega)?;
    let (density_points, _) = position_rule.scaled_points(scales.position_density);
    let density_values = g.sample_grid(&density_points).iter().map(|v| Complex64::new(v.norm_sqr(), 0.0)).collect();
    let density = TensorSamples::from_values(position_rule, scales.position_density, density_values);
    let samples = TensorSamples::sample(position_rule, scales.position, g);
    let (pi_nodes, _) = momentum_rule.scaled_points(scales.momentum_density);
    let f = samples.contract_grid(&pi_nodes, forward_kernel);
    let c = norm_3d() * norm_3d();
    let f_density = f.iter().map(|v| Complex64::new(v.norm_sqr() * c, 0.0)).collect();
    let momentum = TensorSamples::from_values(momentum_rule, scales.momentum_density, f_density);
    Ok((density.integrate().re, momentum.integrate().re))
}

fn scale_all(mut v: Vec<Complex64>, c: f64) -> Vec<Complex64> {
    for x in &mut v {
        *x *= c;
    }
    v
}
