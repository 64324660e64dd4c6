//! Hermite polynomials and normalized Hermite functions.

use crate::error::{domain, Result};

/// Largest admissible quantum number per axis.
pub const MAX_QUANTUM_NUMBER: u32 = 64;

const PI_POW_NEG_QUARTER: f64 = 0.751_125_544_464_942_5;

/// Physicists' Hermite polynomial `H_l(y)` by the three-term recurrence
/// `H_{l+1} = 2y H_l − 2l H_{l−1}`.
pub fn hermite(l: i64, y: f64) -> Result<f64> {
    if l < 0 {
        return Err(domain(format!("Hermite degree must be non-negative, got {l}")));
    }
    let (mut prev, mut cur) = (1.0, 2.0 * y);
    if l == 0 {
        return Ok(prev);
    }
    for k in 1..l {
        let next = 2.0 * y * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `ln(l!)`.
pub fn ln_factorial(l: u32) -> f64 {
    (2..=l).map(|k| (k as f64).ln()).sum()
}

// Mantissas are renormalized once they exceed this bound; the dropped
// magnitude goes into a running log scale.
const RESCALE_ABOVE: f64 = 1e150;

/// `h_k(y) = H_k(y) e^{−y²/2} / sqrt(2^k k! √π)` for `k = 0..=l`.
///
/// Uses the normalized recurrence
/// `h_{k+1} = sqrt(2/(k+1)) y h_k − sqrt(k/(k+1)) h_{k−1}` carried as
/// mantissa plus log-magnitude, so neither `2^k k!` nor `e^{−y²/2}` is formed
/// on its own and large arguments do not underflow early.
pub fn hermite_functions(l: u32, y: f64) -> Vec<f64> {
    let n = l as usize + 1;
    let mut mant = vec![0.0; n];
    let mut log_scale = vec![0.0; n];
    let mut scale = -0.5 * y * y;
    let (mut prev, mut cur) = (0.0, PI_POW_NEG_QUARTER);
    mant[0] = cur;
    log_scale[0] = scale;
    for k in 0..l as usize {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * y * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE_ABOVE {
            cur /= RESCALE_ABOVE;
            prev /= RESCALE_ABOVE;
            scale += RESCALE_ABOVE.ln();
        }
        mant[k + 1] = cur;
        log_scale[k + 1] = scale;
    }
    mant.iter()
        .zip(&log_scale)
        .map(|(m, s)| {
            if *m == 0.0 {
                0.0
            } else if *s > -700.0 {
                m * s.exp()
            } else {
                m.signum() * (s + m.abs().ln()).exp()
            }
        })
        .collect()
}

/// Single normalized Hermite function `h_l(y)`.
pub fn hermite_function(l: u32, y: f64) -> f64 {
    *hermite_functions(l, y).last().unwrap()
}

/// `(h_l(y), h_l'(y))` using `h_l' = sqrt(l/2) h_{l−1} − sqrt((l+1)/2) h_{l+1}`.
pub fn hermite_function_with_derivative(l: u32, y: f64) -> (f64, f64) {
    let h = hermite_functions(l + 1, y);
    let li = l as usize;
    let lower = if l == 0 { 0.0 } else { (l as f64 / 2.0).sqrt() * h[li - 1] };
    let deriv = lower - ((l as f64 + 1.0) / 2.0).sqrt() * h[li + 1];
    (h[li], deriv)
}

/// `(h_l, h_l', h_l'')` from the ladder relations of the Hermite functions,
/// `h_l'' = (√(l(l−1)) h_{l−2} − (2l+1) h_l + √((l+1)(l+2)) h_{l+2}) / 2`.
pub fn hermite_function_derivatives(l: u32, y: f64) -> (f64, f64, f64) {
    let h = hermite_functions(l + 2, y);
    let li = l as usize;
    let lf = l as f64;
    let below = |k: usize| if li >= k { h[li - k] } else { 0.0 };
    let first = (lf / 2.0).sqrt() * below(1) - ((lf + 1.0) / 2.0).sqrt() * h[li + 1];
    let second = 0.5
        * ((lf * (lf - 1.0)).max(0.0).sqrt() * below(2) - (2.0 * lf + 1.0) * h[li]
            + ((lf + 1.0) * (lf + 2.0)).sqrt() * h[li + 2]);
    (h[li], first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_order_values() {
        assert_eq!(hermite(0, 3.7).unwrap(), 1.0);
        assert_eq!(hermite(2, 1.0).unwrap(), 2.0);
        assert_eq!(hermite(3, 0.5).unwrap(), -5.0);
        assert!(hermite(-1, 0.0).is_err());
    }

    #[test]
    fn explicit_polynomials() {
        for &y in &[-1.3, 0.0, 0.4, 2.2] {
            let y: f64 = y;
            assert_relative_eq!(hermite(4, y).unwrap(), 16.0 * y.powi(4) - 48.0 * y * y + 12.0, epsilon = 1e-12);
            assert_relative_eq!(
                hermite(5, y).unwrap(),
                32.0 * y.powi(5) - 160.0 * y.powi(3) + 120.0 * y,
                epsilon = 1e-11
            );
        }
    }

    #[test]
    fn normalized_functions_match_direct_formula() {
        for l in 0..=20u32 {
            for &y in &[-3.0, -0.7, 0.0, 0.35, 1.9, 4.5] {
                let ln_norm = 0.5 * (l as f64 * 2f64.ln() + ln_factorial(l) + 0.5 * std::f64::consts::PI.ln());
                let direct = hermite(l as i64, y).unwrap() * (-0.5 * y * y - ln_norm).exp();
                let h = hermite_function(l, y);
                assert!((h - direct).abs() < 1e-12 * (1.0 + direct.abs()), "l={l} y={y}: {h} vs {direct}");
            }
        }
    }

    #[test]
    fn large_arguments_stay_finite() {
        let h = hermite_function(64, 30.0);
        assert!(h.is_finite());
        // e^{-y²/2} alone underflows at y = 40 but h_64(40) ≈ 1e-280 does not.
        let far = hermite_function(64, 40.0);
        assert!(far > 0.0 && far < 1e-250);
    }

    #[test]
    fn second_derivative_against_difference() {
        for l in 0..8 {
            let y = -0.83;
            let (h, d, dd) = hermite_function_derivatives(l, y);
            assert_eq!(h, hermite_function(l, y));
            assert!((d - hermite_function_with_derivative(l, y).1).abs() < 1e-14);
            let step = 1e-4;
            let fd = (hermite_function(l, y + step) - 2.0 * h + hermite_function(l, y - step)) / (step * step);
            assert!((dd - fd).abs() < 1e-6, "l={l}: {dd} vs {fd}");
        }
    }

    #[test]
    fn derivative_against_difference() {
        for l in 0..8 {
            let y = 0.37;
            let (_, d) = hermite_function_with_derivative(l, y);
            let h = 1e-6;
            let fd = (hermite_function(l, y + h) - hermite_function(l, y - h)) / (2.0 * h);
            assert!((d - fd).abs() < 1e-8);
        }
    }
}
