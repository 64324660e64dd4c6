//! Residuals of the wave equations satisfied by the oscillator states.
//!
//! For `ψ = φ(ξ(x)) exp(iP·X)` the suite checks
//!
//! * the CM equation `□_X ψ = M0² ψ`,
//! * the constraint `P^μ ∂_μ φ = 0`,
//! * the four-space internal equation `□φ − Ω² ξ² φ + 2σ φ = 0`,
//! * its constraint-space form `−Σ ∂²φ/∂ξ_i² + Ω² ξ² φ = 2σ φ`.

use num_complex::Complex64;
use serde_json::json;

use super::{cvec, random_state, record_ratio, state_inputs, vec4, with, xi_radius, SENTINEL_STEPS, SENTINEL_TOLERANCE};
use crate::constraint::{xi_from_x, xi_jacobian, xi_laplacian};
use crate::finite_diff::{
    d_alembertian, directional_first, directional_second, directional_second_fourth_order, Field4, SECOND_DERIVATIVE_STEP,
};
use crate::minkowski::FourVector;
use crate::oscillator::{InternalField, OscillatorState, QuantumNumbers};
use crate::registry::Named;
use crate::verify::{Check, DerivativeMode, Sampler, Source, Suite, SuiteConfig, SuiteReport};
use crate::Result;

const NAME: &str = "pde";

/// Relative step of the five-point CM stencil, divided by `max(1, |P|)`.
const CM_STEP: f64 = 1e-2;

/// Step along `P` for the constraint derivative, divided by `|P|`.
const CONSTRAINT_STEP: f64 = 1e-5;

pub struct PdeSuite;

impl Named for PdeSuite {
    fn name(&self) -> &'static str {
        NAME
    }
}

struct Checks {
    internal_analytic: Check,
    constraint_analytic: Check,
    cm_analytic: Check,
    internal_fd: Check,
    four_space_fd: Check,
    constraint_fd: Check,
    cm_fd: Check,
    sentinel: Check,
}

struct Sample {
    x: FourVector,
    xi: crate::constraint::ConstraintVector,
    phi: f64,
}

impl Suite for PdeSuite {
    fn description(&self) -> &'static str {
        "CM, constraint and internal wave-equation residuals of every state up to max_n, analytic in the rest frame and by finite differences in boosted frames"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let analytic = cfg.pde_mode != Some(DerivativeMode::FiniteDifference);
        let numeric = cfg.pde_mode != Some(DerivativeMode::Analytic);
        let mut rng = Sampler::new(cfg.seed, 2);
        let mut c = Checks {
            internal_analytic: cfg.check(NAME, "internal-equation-analytic", 1e-10),
            constraint_analytic: cfg.check(NAME, "constraint-equation-analytic", 1e-10),
            cm_analytic: cfg.check(NAME, "cm-equation-analytic", 1e-10),
            internal_fd: cfg.check(NAME, "internal-equation-finite-difference", 1e-5),
            four_space_fd: cfg.check(NAME, "four-space-equation-finite-difference", 1e-5),
            constraint_fd: cfg.check(NAME, "constraint-equation-finite-difference", 1e-5),
            cm_fd: cfg.check(NAME, "cm-equation-finite-difference", 1e-5),
            sentinel: cfg.check(NAME, "finite-difference-order", SENTINEL_TOLERANCE),
        };

        for quanta in QuantumNumbers::up_to(cfg.max_n) {
            let rest = random_state(&mut rng, quanta, [0.0; 3])?;
            if analytic {
                let points = sample(&mut rng, &rest, cfg.points);
                analytic_cases(&rest, &points, cfg.sigma_perturb, &mut c);
            }
            if numeric {
                let frames = [rng.velocity(cfg.frame_vmax), rng.velocity_with_speed(cfg.frame_vmax)];
                for v in frames {
                    let moving = rest.in_frame(&v)?;
                    let points = sample(&mut rng, &moving, cfg.points);
                    numeric_cases(&moving, &points, cfg.sigma_perturb, &mut c);
                }
            }
        }
        if numeric {
            let v = rng.velocity(cfg.frame_vmax);
            let state = random_state(&mut rng, QuantumNumbers::new(1, 0, 1)?, v)?;
            let pts = sample(&mut rng, &state, 1);
            sentinel_case(&state, &pts[0].x, &mut c.sentinel);
        }

        let mut out = Vec::new();
        if analytic {
            out.extend([c.internal_analytic.finish(), c.constraint_analytic.finish(), c.cm_analytic.finish()]);
        }
        if numeric {
            out.extend([
                c.internal_fd.finish(),
                c.four_space_fd.finish(),
                c.constraint_fd.finish(),
                c.cm_fd.finish(),
                c.sentinel.finish(),
            ]);
        }
        Ok(SuiteReport::new(NAME, out))
    }
}

fn sample(rng: &mut Sampler, state: &OscillatorState, count: usize) -> Vec<Sample> {
    let r = xi_radius(state.omega());
    (0..count)
        .map(|_| {
            let xi = rng.xi(r);
            let x = rng.point_over(&xi, state.system());
            let xi = xi_from_x(&x, state.system());
            Sample {
                x,
                phi: state.internal_position(&xi),
                xi,
            }
        })
        .collect()
}

/// σ entering the residuals, shifted by `perturb · Ω`.
fn residual_sigma(state: &OscillatorState, perturb: f64) -> f64 {
    state.sigma() + perturb * state.omega()
}

/// Largest `|2σφ|` over the sampled points, the scale of the internal residuals.
fn internal_scale(points: &[Sample], sigma: f64) -> f64 {
    points.iter().map(|s| (2.0 * sigma * s.phi).abs()).fold(0.0, f64::max)
}

fn phi_scale(points: &[Sample]) -> f64 {
    points.iter().map(|s| s.phi.abs()).fold(0.0, f64::max)
}

/// CM position paired with a relative sample point.
fn cm_point(s: &Sample) -> FourVector {
    FourVector(s.x.0.map(|c| 0.5 * c - 0.25))
}

fn analytic_cases(state: &OscillatorState, points: &[Sample], perturb: f64, c: &mut Checks) {
    let sigma = residual_sigma(state, perturb);
    let omega = state.omega();
    let scale = internal_scale(points, sigma);
    let base = state_inputs(state);
    let sys = state.system();
    let p = sys.total_momentum();
    let m0 = sys.rest_mass();
    let grad_scale = p.euclidean_norm() * omega.sqrt() * phi_scale(points);
    let field = InternalField(state);
    for (k, s) in points.iter().enumerate() {
        let label = format!("{:?} point {k}", state.quanta().as_array());
        let inputs = with(base.clone(), json!({"xi": cvec(&s.xi), "x": vec4(&s.x)}));
        let (_, _, hess) = state.internal_derivatives(&s.xi);
        let lap = hess[0][0] + hess[1][1] + hess[2][2];
        let lhs = -lap + omega * omega * s.xi.norm_sq() * s.phi;
        c.internal_analytic.real(&label, inputs.clone(), lhs, 2.0 * sigma * s.phi, scale, Source::Analytic);

        let grad = field.analytic_gradient(&s.x).expect("oscillator fields have gradients");
        let along_p: Complex64 = (0..4).map(|mu| grad.0[mu] * p.0[mu]).sum();
        c.constraint_analytic.real(&label, inputs.clone(), along_p.norm(), 0.0, grad_scale, Source::Analytic);

        c.cm_analytic.real(&label, inputs, -p.dot(&p), m0 * m0, m0 * m0, Source::Exact);
    }
}

fn numeric_cases(state: &OscillatorState, points: &[Sample], perturb: f64, c: &mut Checks) {
    let sigma = residual_sigma(state, perturb);
    let omega = state.omega();
    let scale = internal_scale(points, sigma);
    let base = state_inputs(state);
    let sys = state.system();
    let p = sys.total_momentum();
    let m0 = sys.rest_mass();
    let u = sys.four_velocity();
    let p_norm = p.euclidean_norm();
    let grad_scale = p_norm * omega.sqrt() * phi_scale(points);
    let phi = |y: &FourVector| state.internal_position(&xi_from_x(y, sys));
    let cm_step = CM_STEP / p_norm.max(1.0);
    for (k, s) in points.iter().enumerate() {
        let label = format!("{:?} point {k}", state.quanta().as_array());
        let inputs = with(base.clone(), json!({"xi": cvec(&s.xi), "x": vec4(&s.x)}));
        let box_phi = d_alembertian(phi, &s.x, SECOND_DERIVATIVE_STEP);
        let along_u = directional_second(phi, &s.x, &u, SECOND_DERIVATIVE_STEP);
        let potential = omega * omega * s.xi.norm_sq() * s.phi;

        let lap = xi_laplacian(box_phi, along_u);
        c.internal_fd.real(&label, inputs.clone(), -lap + potential, 2.0 * sigma * s.phi, scale, Source::FiniteDifference);
        c.four_space_fd.real(&label, inputs.clone(), box_phi - potential + 2.0 * sigma * s.phi, 0.0, scale, Source::FiniteDifference);

        let along_p = directional_first(phi, &s.x, &p, CONSTRAINT_STEP / p_norm);
        c.constraint_fd.real(&label, inputs.clone(), along_p, 0.0, grad_scale, Source::FiniteDifference);

        let cm = cm_point(s);
        let wave = |y: &FourVector| state.phase(y);
        let box_wave: Complex64 = (0..4)
            .map(|mu| {
                let d = directional_second_fourth_order(wave, &cm, &FourVector::unit(mu), cm_step);
                if mu == 3 {
                    -d
                } else {
                    d
                }
            })
            .sum();
        c.cm_fd.complex(
            &label,
            with(inputs, json!({"cm": vec4(&cm)})),
            box_wave,
            wave(&cm) * (m0 * m0),
            m0 * m0,
            Source::FiniteDifference,
        );
    }
}

/// `∂²φ/∂(x^1)²` by second differences at two steps against the chain rule.
fn sentinel_case(state: &OscillatorState, x: &FourVector, check: &mut Check) {
    let sys = state.system();
    let phi = |y: &FourVector| state.internal_position(&xi_from_x(y, sys));
    let (_, _, hess) = state.internal_derivatives(&xi_from_x(x, sys));
    let jac = xi_jacobian(sys);
    let exact: f64 = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| jac[i][0] * jac[j][0] * hess[i][j]).sum();
    let e1 = FourVector::unit(0);
    let err = |h: f64| (directional_second(phi, x, &e1, h) - exact).abs();
    let (h1, h2) = SENTINEL_STEPS;
    record_ratio(
        check,
        "d2 phi / d(x1)^2",
        with(state_inputs(state), json!({"x": vec4(x), "steps": [h1, h2]})),
        err(h1),
        err(h2),
        Source::FiniteDifference,
    );
}
