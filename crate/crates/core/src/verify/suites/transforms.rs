//! Quadrature transforms of oscillator states against closed forms.

use num_complex::Complex64;
use serde_json::json;

use super::{random_state, state_inputs, with, OMEGA_RANGE};
use crate::constraint::{ComplexConstraintVector, ConstraintVector};
use crate::oscillator::{OscillatorState, QuantumNumbers};
use crate::registry::Named;
use crate::transforms::{
    bargmann_transform, bargmann_transform_3d_many, fourier_eigenphase, fourier_forward, fourier_forward_grid, fourier_round_trip,
    gauss_hermite, normalization_integral, overlap, parseval_norms, position_product, required_normalization_order,
    required_transform_order, QuadratureRule, MAX_ORDER,
};
use crate::oscillator::{phi_1d, phi_1d_momentum};
use crate::verify::{Check, Sampler, Source, Suite, SuiteConfig, SuiteReport};
use crate::Result;

const NAME: &str = "transforms";

/// Momentum targets per axis, in units of `√Ω`.
const MOMENTUM_GRID: [f64; 5] = [-2.5, -1.2, 0.0, 0.7, 2.0];

/// Real and imaginary parts of the Bargmann α grid.
const ALPHA_GRID: [f64; 5] = [-1.5, -0.75, 0.0, 0.75, 1.5];

const BARGMANN_MAX_L: u32 = 8;
const ORTHOGONALITY_MAX_N: u32 = 3;

/// Round-trip targets are drawn from the nodes of this rule.
const TARGET_RULE_ORDER: usize = 8;
const ROUND_TRIP_TARGETS: usize = 20;

/// Forward rule of the round trip, relative to the inverse rule.
const ROUND_TRIP_FORWARD_FACTOR: usize = 3;

/// α vectors per state in the three-dimensional Bargmann check.
const BARGMANN_3D_ALPHAS: usize = 4;

pub struct TransformSuite;

impl Named for TransformSuite {
    fn name(&self) -> &'static str {
        NAME
    }
}

fn capped(order: usize) -> usize {
    order.min(MAX_ORDER)
}

fn max_abs(values: impl IntoIterator<Item = Complex64>) -> f64 {
    values.into_iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// `Π (−i)^l_i φ_l_i(π_i)`, the closed-form forward transform of a position state.
fn expected_momentum(state: &OscillatorState, pi: &ConstraintVector) -> Complex64 {
    let l = state.quanta().as_array();
    (0..3)
        .map(|i| fourier_eigenphase(l[i]) * phi_1d_momentum(l[i], state.omega(), pi.0[i]).expect("validated state"))
        .product()
}

fn grid_points(axis: &[f64]) -> Vec<ConstraintVector> {
    let mut out = Vec::with_capacity(axis.len().pow(3));
    for &a in axis {
        for &b in axis {
            for &c in axis {
                out.push(ConstraintVector([a, b, c]));
            }
        }
    }
    out
}

struct Rules {
    base: QuadratureRule,
    doubled: QuadratureRule,
    forward: QuadratureRule,
}

impl Suite for TransformSuite {
    fn description(&self) -> &'static str {
        "normalization and orthogonality by Gauss-Hermite quadrature, Fourier transforms against the closed-form momentum functions, round-trip inversion, Parseval and Segal-Bargmann monomials"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let mut rng = Sampler::new(cfg.seed, 5);
        let rules = Rules {
            base: gauss_hermite(cfg.order)?,
            doubled: gauss_hermite(capped(2 * cfg.order))?,
            forward: gauss_hermite(capped(ROUND_TRIP_FORWARD_FACTOR * cfg.order))?,
        };
        let order = cfg.order;
        let mut checks = vec![
            normalization_checks(cfg, &rules, &mut rng)?,
            fourier_checks(cfg, &rules, &mut rng)?,
            bargmann_checks(cfg, &rules.base, &mut rng)?,
        ]
        .into_iter()
        .flatten()
        .collect::<Vec<Check>>();

        let trusted = required_transform_order(cfg.max_n);
        for c in checks.iter_mut() {
            let transform_check = c.name().starts_with("fourier") || c.name().starts_with("bargmann") || c.name() == "parseval";
            if transform_check && order < trusted {
                c.flag_insufficient_order();
            }
        }
        Ok(SuiteReport::new(NAME, checks.into_iter().map(Check::finish).collect()))
    }
}

fn normalization_checks(cfg: &SuiteConfig, rules: &Rules, rng: &mut Sampler) -> Result<Vec<Check>> {
    let mut norm = cfg.check(NAME, "normalization", 1e-10);
    let mut converge = cfg.check(NAME, "normalization-convergence", 1e-12);
    let mut ortho = cfg.check(NAME, "orthogonality", 1e-10);
    for quanta in QuantumNumbers::up_to(cfg.normalization_max_n) {
        let state = random_state(rng, quanta, [0.0; 3])?;
        let label = format!("{:?}", quanta.as_array());
        let inputs = with(state_inputs(&state), json!({"order": rules.base.order()}));
        let coarse = normalization_integral(&state, &rules.base);
        if coarse.insufficient_order {
            norm.flag_insufficient_order();
        }
        norm.real(&label, inputs.clone(), coarse.value, 1.0, 1.0, Source::Quadrature);
        if rules.base.order() >= required_normalization_order(quanta.n()) {
            let fine = normalization_integral(&state, &rules.doubled);
            converge.real(
                &label,
                with(inputs, json!({"fine_order": rules.doubled.order()})),
                coarse.value,
                fine.value,
                1.0,
                Source::Quadrature,
            );
        }
    }
    let omega = rng.uniform(OMEGA_RANGE.0, OMEGA_RANGE.1);
    let (m1, m2) = rng.masses();
    let states = QuantumNumbers::up_to(ORTHOGONALITY_MAX_N)
        .into_iter()
        .map(|q| OscillatorState::new(q, omega, m1, m2, [0.0; 3]))
        .collect::<Result<Vec<_>>>()?;
    for (i, a) in states.iter().enumerate() {
        for b in &states[i + 1..] {
            let r = overlap(a, b, &rules.base)?;
            if r.insufficient_order {
                ortho.flag_insufficient_order();
            }
            ortho.real(
                format!("{:?} {:?}", a.quanta().as_array(), b.quanta().as_array()),
                json!({"a": a.quanta().as_array(), "b": b.quanta().as_array(), "omega": omega, "order": rules.base.order()}),
                r.value,
                0.0,
                1.0,
                Source::Quadrature,
            );
        }
    }
    Ok(vec![norm, converge, ortho])
}

fn fourier_checks(cfg: &SuiteConfig, rules: &Rules, rng: &mut Sampler) -> Result<Vec<Check>> {
    let mut modulus = cfg.check(NAME, "fourier-modulus", 1e-8);
    let mut phase = cfg.check(NAME, "fourier-phase", 1e-8);
    let mut converge = cfg.check(NAME, "fourier-convergence", 1e-12);
    let mut round_trip = cfg.check(NAME, "fourier-round-trip", 1e-8);
    let mut parseval = cfg.check(NAME, "parseval", 1e-8);
    let mut linearity = cfg.check(NAME, "fourier-linearity", 1e-10);
    let target_nodes = gauss_hermite(TARGET_RULE_ORDER)?;

    for quanta in QuantumNumbers::up_to(cfg.max_n) {
        let state = random_state(rng, quanta, [0.0; 3])?;
        let omega = state.omega();
        let label = format!("{:?}", quanta.as_array());
        let base = with(state_inputs(&state), json!({"order": rules.base.order()}));

        let axis: Vec<f64> = MOMENTUM_GRID.iter().map(|c| c * omega.sqrt()).collect();
        let targets = grid_points(&axis);
        let got = fourier_forward_grid(position_product(&state), &axis, &rules.base, omega)?;
        let fine = fourier_forward_grid(position_product(&state), &axis, &rules.doubled, omega)?;
        let want: Vec<Complex64> = targets.iter().map(|pi| expected_momentum(&state, pi)).collect();
        let scale = max_abs(want.iter().copied());
        for (k, pi) in targets.iter().enumerate() {
            let case = format!("{label} pi {k}");
            let inputs = with(base.clone(), json!({"pi": pi.0}));
            modulus.real(&case, inputs.clone(), got[k].norm(), want[k].norm(), scale, Source::Quadrature);
            phase.complex(&case, inputs.clone(), got[k], want[k], scale, Source::Quadrature);
            converge.complex(
                &case,
                with(inputs, json!({"fine_order": rules.doubled.order()})),
                got[k],
                fine[k],
                scale,
                Source::Quadrature,
            );
        }

        let (node_points, _) = target_nodes.scaled_points(omega.sqrt());
        let xi_targets: Vec<ConstraintVector> = (0..ROUND_TRIP_TARGETS)
            .map(|_| ConstraintVector(std::array::from_fn(|_| node_points[rng.index(node_points.len())])))
            .collect();
        let back = fourier_round_trip(position_product(&state), &xi_targets, &rules.forward, &rules.base, omega)?;
        let originals: Vec<f64> = xi_targets.iter().map(|xi| state.internal_position(xi)).collect();
        let scale = originals.iter().map(|v| v.abs()).fold(0.0, f64::max);
        for (k, xi) in xi_targets.iter().enumerate() {
            round_trip.complex(
                format!("{label} xi {k}"),
                with(base.clone(), json!({"xi": xi.0, "forward_order": rules.forward.order()})),
                back[k],
                Complex64::new(originals[k], 0.0),
                scale,
                Source::Quadrature,
            );
        }

        let (g_norm, f_norm) = parseval_norms(position_product(&state), &rules.doubled, &rules.base, omega)?;
        parseval.real(
            &label,
            with(base.clone(), json!({"position_order": rules.doubled.order(), "position_norm": g_norm})),
            f_norm,
            g_norm,
            g_norm,
            Source::Quadrature,
        );

        if quanta.n() <= 1 {
            let other = state.with_quanta(QuantumNumbers::new(0, 1, 1)?)?;
            let (a, b) = (Complex64::new(0.6, -0.3), Complex64::new(-1.1, 0.4));
            let combo = |xi: &ConstraintVector| a * state.internal_position(xi) + b * other.internal_position(xi);
            let first = |xi: &ConstraintVector| Complex64::new(state.internal_position(xi), 0.0);
            let second = |xi: &ConstraintVector| Complex64::new(other.internal_position(xi), 0.0);
            let pis: Vec<ConstraintVector> = targets.iter().step_by(17).copied().collect();
            let lhs = fourier_forward(combo, &pis, &rules.base, omega)?;
            let f1 = fourier_forward(first, &pis, &rules.base, omega)?;
            let f2 = fourier_forward(second, &pis, &rules.base, omega)?;
            let scale = max_abs(lhs.iter().copied()).max(1e-300);
            for (k, pi) in pis.iter().enumerate() {
                linearity.complex(
                    format!("{label} pi {k}"),
                    with(base.clone(), json!({"pi": pi.0, "a": [a.re, a.im], "b": [b.re, b.im]})),
                    lhs[k],
                    a * f1[k] + b * f2[k],
                    scale,
                    Source::CrossCheck,
                );
            }
        }
    }
    Ok(vec![modulus, phase, converge, round_trip, parseval, linearity])
}

fn alpha_grid() -> Vec<Complex64> {
    ALPHA_GRID
        .iter()
        .flat_map(|&re| ALPHA_GRID.iter().map(move |&im| Complex64::new(re, im)))
        .collect()
}

fn bargmann_checks(cfg: &SuiteConfig, rule: &QuadratureRule, rng: &mut Sampler) -> Result<Vec<Check>> {
    let mut monomials = cfg.check(NAME, "bargmann-monomials", 1e-9);
    let mut ground = cfg.check(NAME, "bargmann-ground", 1e-10);
    let mut three_d = cfg.check(NAME, "bargmann-3d", 1e-9);
    let sign = cfg.kernel_sign;
    let grid = alpha_grid();

    for l in 0..=BARGMANN_MAX_L {
        let omega = rng.uniform(OMEGA_RANGE.0, OMEGA_RANGE.1);
        let g = |xi: f64| Complex64::new(phi_1d(l, omega, xi).expect("validated state"), 0.0);
        let norm = (1..=l).map(f64::from).product::<f64>().sqrt();
        for alpha in &grid {
            let got = bargmann_transform(g, *alpha, omega, rule, sign)?;
            let want = alpha.powu(l) / norm;
            let inputs = json!({"l": l, "omega": omega, "alpha": [alpha.re, alpha.im], "order": rule.order(), "kernel_sign": sign});
            let label = format!("l {l} alpha ({}, {})", alpha.re, alpha.im);
            monomials.complex(&label, inputs.clone(), got, want, want.norm().max(1.0), Source::Quadrature);
            if l == 0 {
                ground.complex(&label, inputs, got, Complex64::new(1.0, 0.0), 1.0, Source::Quadrature);
            }
        }
    }

    for quanta in QuantumNumbers::up_to(cfg.max_n) {
        let state = random_state(rng, quanta, [0.0; 3])?;
        let alphas: Vec<ComplexConstraintVector> = (0..BARGMANN_3D_ALPHAS)
            .map(|_| ComplexConstraintVector(std::array::from_fn(|_| grid[rng.index(grid.len())])))
            .collect();
        let got = bargmann_transform_3d_many(position_product(&state), &alphas, state.omega(), rule, sign)?;
        for (k, alpha) in alphas.iter().enumerate() {
            let want = state.internal_bargmann(alpha);
            let alpha_json: Vec<[f64; 2]> = alpha.0.iter().map(|a| [a.re, a.im]).collect();
            three_d.complex(
                format!("{:?} alpha {k}", quanta.as_array()),
                with(state_inputs(&state), json!({"alpha": alpha_json, "order": rule.order(), "kernel_sign": sign})),
                got[k],
                want,
                want.norm().max(1.0),
                Source::Quadrature,
            );
        }
    }
    Ok(vec![monomials, ground, three_d])
}
