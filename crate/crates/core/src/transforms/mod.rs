//! Quadrature-based integral transforms between constraint spaces.
//!
//! Every integrand here decays like a Gaussian in each constraint
//! coordinate. Integrals over `u` (ξ or π) use the substitution `y = s u`,
//! with `s` matching the integrand's decay to the rule's `exp(−y²)` and
//! the Jacobian `1/s` applied per axis. Inputs are evaluators that are
//! sampled on demand at the rescaled nodes.

pub mod bargmann;
pub mod fourier;
pub mod normalization;
pub mod quadrature;

use num_complex::Complex64;

use crate::constraint::ConstraintVector;
use crate::oscillator::{phi_1d, phi_1d_momentum, OscillatorState};

pub use bargmann::{bargmann_transform, bargmann_transform_3d, bargmann_transform_3d_many, KernelSign, ALPHA_GUARD};
pub use fourier::{
    fourier_eigenphase, fourier_forward, fourier_forward_1d, fourier_forward_grid, fourier_inverse, fourier_inverse_1d,
    fourier_round_trip, parseval_norms, FourierScales,
};
pub use normalization::{normalization_integral, overlap, NormalizationResult};
pub use quadrature::{gauss_hermite, QuadratureRule, MAX_ORDER, MIN_ORDER};

/// Smallest order at which normalization and overlap integrals of level-`n`
/// states are trusted.
pub fn required_normalization_order(n: u32) -> usize {
    n as usize + 2
}

/// Smallest order at which Fourier and Bargmann transforms of level-`n`
/// states are trusted.
pub fn required_transform_order(n: u32) -> usize {
    2 * n as usize + 8
}

/// A function of three constraint coordinates that can be sampled on the
/// tensor grid `points³` (row-major, last axis fastest).
pub trait GridFunction {
    fn sample_grid(&self, points: &[f64]) -> Vec<Complex64>;
}

impl<F: Fn(&ConstraintVector) -> Complex64> GridFunction for F {
    fn sample_grid(&self, points: &[f64]) -> Vec<Complex64> {
        let mut values = Vec::with_capacity(points.len().pow(3));
        for &a in points {
            for &b in points {
                for &c in points {
                    values.push(self(&ConstraintVector([a, b, c])));
                }
            }
        }
        values
    }
}

/// Separable function `f1(u1) f2(u2) f3(u3)`; sampling costs `3n` factor
/// evaluations instead of `n³`.
pub struct Product<F>(pub [F; 3]);

impl<F: Fn(f64) -> Complex64> GridFunction for Product<F> {
    fn sample_grid(&self, points: &[f64]) -> Vec<Complex64> {
        let axes: Vec<Vec<Complex64>> = self.0.iter().map(|f| points.iter().map(|&u| f(u)).collect()).collect();
        let mut values = Vec::with_capacity(points.len().pow(3));
        for a in &axes[0] {
            for b in &axes[1] {
                let ab = a * b;
                for c in &axes[2] {
                    values.push(ab * c);
                }
            }
        }
        values
    }
}

/// Internal position function of `state` as a [`Product`].
pub fn position_product(state: &OscillatorState) -> Product<impl Fn(f64) -> Complex64> {
    let omega = state.omega();
    let l = state.quanta().as_array();
    Product(std::array::from_fn(move |i| {
        let li = l[i];
        move |xi: f64| Complex64::new(phi_1d(li, omega, xi).expect("validated state"), 0.0)
    }))
}

/// Internal momentum function of `state` as a [`Product`].
pub fn momentum_product(state: &OscillatorState) -> Product<impl Fn(f64) -> Complex64> {
    let omega = state.omega();
    let l = state.quanta().as_array();
    Product(std::array::from_fn(move |i| {
        let li = l[i];
        move |pi: f64| Complex64::new(phi_1d_momentum(li, omega, pi).expect("validated state"), 0.0)
    }))
}

/// A function sampled on a tensor grid of rescaled quadrature points, with
/// the matching per-axis weights. Values are stored row-major, last axis fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorSamples {
    points: Vec<f64>,
    weights: Vec<f64>,
    values: Vec<Complex64>,
}

impl TensorSamples {
    /// Samples `f` at `(y_a, y_b, y_c)/scale` for all node triples of `rule`.
    pub fn sample(rule: &quadrature::QuadratureRule, scale: f64, f: impl GridFunction) -> Self {
        let (points, weights) = rule.scaled_points(scale);
        let values = f.sample_grid(&points);
        TensorSamples {
            points,
            weights,
            values,
        }
    }

    /// Wraps values already known on the grid built from `rule` and `scale`.
    pub fn from_values(rule: &quadrature::QuadratureRule, scale: f64, values: Vec<Complex64>) -> Self {
        let (points, weights) = rule.scaled_points(scale);
        assert_eq!(values.len(), points.len().pow(3), "grid size mismatch");
        TensorSamples {
            points,
            weights,
            values,
        }
    }

    /// Sample points along one axis (the same on all three).
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `∫ f d³u`.
    pub fn integrate(&self) -> Complex64 {
        let n = self.points.len();
        let mut total = Complex64::new(0.0, 0.0);
        for a in 0..n {
            for b in 0..n {
                let row = &self.values[(a * n + b) * n..(a * n + b + 1) * n];
                let inner: Complex64 = row.iter().zip(&self.weights).map(|(v, w)| v * w).sum();
                total += inner * (self.weights[a] * self.weights[b]);
            }
        }
        total
    }

    /// `Σ_k K(t_1, u_k1) K(t_2, u_k2) K(t_3, u_k3) W_k f(u_k)` for all target
    /// triples on the tensor grid `targets³`, by one contraction per axis.
    pub fn contract_grid(&self, targets: &[f64], kernel: impl Fn(f64, f64) -> Complex64) -> Vec<Complex64> {
        let k = kernel_matrix(targets, &self.points, &self.weights, &kernel);
        separable_contract(&self.values, self.points.len(), [&k, &k, &k], targets.len())
    }

    /// Same contraction at scattered targets.
    pub fn contract_points(
        &self,
        targets: &[ConstraintVector],
        kernel: impl Fn(f64, f64) -> Complex64,
    ) -> Vec<Complex64> {
        targets
            .iter()
            .map(|t| {
                let k: [Vec<Complex64>; 3] =
                    std::array::from_fn(|axis| kernel_matrix(&[t.0[axis]], &self.points, &self.weights, &kernel));
                separable_contract(&self.values, self.points.len(), [&k[0], &k[1], &k[2]], 1)[0]
            })
            .collect()
    }
}

/// `K[t][k] = kernel(targets[t], points[k]) · weights[k]`, row-major.
fn kernel_matrix(
    targets: &[f64],
    points: &[f64],
    weights: &[f64],
    kernel: &impl Fn(f64, f64) -> Complex64,
) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(targets.len() * points.len());
    for &t in targets {
        for (&u, &w) in points.iter().zip(weights) {
            out.push(kernel(t, u) * w);
        }
    }
    out
}

/// Applies three `m × n` matrices to an `n³` row-major array, one axis at a
/// time, giving an `m³` array.
fn separable_contract(values: &[Complex64], n: usize, k: [&[Complex64]; 3], m: usize) -> Vec<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    // Last axis: [a][b][c] -> [a][b][t3]
    let mut t1 = vec![zero; n * n * m];
    for ab in 0..n * n {
        let row = &values[ab * n..(ab + 1) * n];
        for t in 0..m {
            let kr = &k[2][t * n..(t + 1) * n];
            t1[ab * m + t] = row.iter().zip(kr).map(|(v, q)| v * q).sum();
        }
    }
    // Middle axis: [a][b][t3] -> [a][t2][t3]
    let mut t2 = vec![zero; n * m * m];
    for a in 0..n {
        for t in 0..m {
            let kr = &k[1][t * n..(t + 1) * n];
            let out = &mut t2[(a * m + t) * m..(a * m + t + 1) * m];
            for (b, q) in kr.iter().enumerate() {
                let src = &t1[(a * n + b) * m..(a * n + b + 1) * m];
                for (o, s) in out.iter_mut().zip(src) {
                    *o += q * s;
                }
            }
        }
    }
    // First axis: [a][t2][t3] -> [t1][t2][t3]
    let mut t3 = vec![zero; m * m * m];
    for t in 0..m {
        let kr = &k[0][t * n..(t + 1) * n];
        let out = &mut t3[t * m * m..(t + 1) * m * m];
        for (a, q) in kr.iter().enumerate() {
            let src = &t2[a * m * m..(a + 1) * m * m];
            for (o, s) in out.iter_mut().zip(src) {
                *o += q * s;
            }
        }
    }
    t3
}

/// `∫ f d³u` for a real integrand with Gaussian decay matched by `scale`.
pub fn integrate_3d(rule: &quadrature::QuadratureRule, scale: f64, f: impl Fn(&ConstraintVector) -> f64) -> f64 {
    TensorSamples::sample(rule, scale, |u: &ConstraintVector| Complex64::new(f(u), 0.0)).integrate().re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contraction_matches_direct_sum() {
        let rule = gauss_hermite(5).unwrap();
        let f = |u: &ConstraintVector| Complex64::new((-(u.norm_sq())).exp() * (1.0 + u.0[0]), u.0[2]);
        let s = TensorSamples::sample(&rule, 1.3, f);
        let kernel = |t: f64, u: f64| Complex64::new(0.0, t * u).exp();
        let targets = [-0.4, 0.1, 0.9];
        let grid = s.contract_grid(&targets, kernel);
        let (pts, w) = rule.scaled_points(1.3);
        for (i, &ta) in targets.iter().enumerate() {
            for (j, &tb) in targets.iter().enumerate() {
                for (l, &tc) in targets.iter().enumerate() {
                    let mut direct = Complex64::new(0.0, 0.0);
                    for a in 0..5 {
                        for b in 0..5 {
                            for c in 0..5 {
                                let u = ConstraintVector([pts[a], pts[b], pts[c]]);
                                direct += f(&u)
                                    * kernel(ta, pts[a])
                                    * kernel(tb, pts[b])
                                    * kernel(tc, pts[c])
                                    * (w[a] * w[b] * w[c]);
                            }
                        }
                    }
                    let got = grid[(i * 3 + j) * 3 + l];
                    assert!((got - direct).norm() < 1e-13);
                    let point = s.contract_points(&[ConstraintVector([ta, tb, tc])], kernel)[0];
                    assert!((point - direct).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn gaussian_volume() {
        let rule = gauss_hermite(12).unwrap();
        let omega: f64 = 2.5;
        let v = integrate_3d(&rule, omega.sqrt(), |u| (-omega * u.norm_sq()).exp());
        assert!((v - (std::f64::consts::PI / omega).powf(1.5)).abs() < 1e-13);
    }
}
