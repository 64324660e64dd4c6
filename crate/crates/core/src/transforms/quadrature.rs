//! Gauss–Hermite quadrature for the weight `exp(−y²)`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

pub const MIN_ORDER: usize = 1;
pub const MAX_ORDER: usize = 256;

const NEWTON_TOLERANCE: f64 = 1e-15;
const NEWTON_MAX_ITERATIONS: usize = 100;
const PI_POW_NEG_QUARTER: f64 = 0.751_125_544_464_942_5;

/// Nodes and weights of an `order`-point Gauss–Hermite rule, ascending.
///
/// `scaled_weights[k] = weights[k] · exp(nodes[k]²)` integrate plain
/// functions, `∫ f(y) dy ≈ Σ scaled_weights[k] f(nodes[k])`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    scaled_weights: Vec<f64>,
}

/// Orthonormal Hermite polynomial `p_n(z)` and `p_{n−1}(z)` (no Gaussian factor).
fn orthonormal_pair(n: usize, z: f64) -> (f64, f64) {
    let (mut p1, mut p2) = (PI_POW_NEG_QUARTER, 0.0);
    for j in 1..=n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
    }
    (p1, p2)
}

/// Initial estimate of the `k`-th largest root of `H_n` (`k` from 1) from
/// the WKB condition `(ν/2)(θ − sin θ cos θ) = (k − 1/4)π`, `x = √ν cos θ`,
/// `ν = 2n + 1`.
fn root_estimate(n: usize, k: usize) -> f64 {
    let nu = 2.0 * n as f64 + 1.0;
    let c = (k as f64 - 0.25) * 2.0 * PI / nu;
    let mut theta = if c < 0.3 { (1.5 * c).cbrt() } else { c.min(1.5) };
    for _ in 0..100 {
        let f = theta - theta.sin() * theta.cos() - c;
        let next = (theta - f / (2.0 * theta.sin().powi(2))).clamp(1e-8, FRAC_PI_2);
        let done = (next - theta).abs() < 1e-15;
        theta = next;
        if done {
            break;
        }
    }
    nu.sqrt() * theta.cos()
}

/// Builds the rule by Newton iteration on `H_order` from asymptotic
/// estimates of each positive root.
pub fn gauss_hermite(order: usize) -> Result<QuadratureRule> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&order) {
        return Err(domain(format!(
            "quadrature order must be in {MIN_ORDER}..={MAX_ORDER}, got {order}"
        )));
    }
    let n = order;
    let nf = n as f64;
    let half = n.div_ceil(2);
    // Positive roots, largest first.
    let mut roots = vec![0.0; half];
    let mut ln_w = vec![0.0; half];
    for i in 0..half {
        let mut z = root_estimate(n, i + 1);
        let mut deriv = 0.0;
        for _ in 0..NEWTON_MAX_ITERATIONS {
            let (p, q) = orthonormal_pair(n, z);
            deriv = (2.0 * nf).sqrt() * q;
            let step = p / deriv;
            z -= step;
            if step.abs() <= NEWTON_TOLERANCE * z.abs().max(1.0) {
                break;
            }
        }
        // Polish the weight at the converged root.
        let (_, q) = orthonormal_pair(n, z);
        deriv = if q != 0.0 { (2.0 * nf).sqrt() * q } else { deriv };
        roots[i] = z;
        ln_w[i] = 2f64.ln() - 2.0 * deriv.abs().ln();
    }
    if n % 2 == 1 {
        roots[half - 1] = 0.0;
    }
    let mut nodes = vec![0.0; n];
    let mut lw = vec![0.0; n];
    for i in 0..half {
        nodes[i] = -roots[i];
        nodes[n - 1 - i] = roots[i];
        lw[i] = ln_w[i];
        lw[n - 1 - i] = ln_w[i];
    }
    let weights = lw.iter().map(|l| l.exp()).collect();
    let scaled_weights = lw.iter().zip(&nodes).map(|(l, y)| (l + y * y).exp()).collect();
    Ok(QuadratureRule {
        order,
        nodes,
        weights,
        scaled_weights,
    })
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn scaled_weights(&self) -> &[f64] {
        &self.scaled_weights
    }

    /// `∫ f(y) exp(−y²) dy`.
    pub fn integrate_weighted(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&y, &w)| w * f(y)).sum()
    }

    /// `∫ f(u) du` for `f` carrying its own Gaussian decay like `exp(−(s u)²)`,
    /// via the substitution `y = s u`.
    pub fn integrate_scaled(&self, scale: f64, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.scaled_weights)
            .map(|(&y, &w)| w * f(y / scale))
            .sum::<f64>()
            / scale
    }

    /// Sample points `u_k = y_k / s` and weights `W_k = scaled_w_k / s` of
    /// the substituted rule.
    pub fn scaled_points(&self, scale: f64) -> (Vec<f64>, Vec<f64>) {
        (
            self.nodes.iter().map(|y| y / scale).collect(),
            self.scaled_weights.iter().map(|w| w / scale).collect(),
        )
    }
}
