//! Frame invariance of the constraint coordinates.

use serde_json::json;

use super::{cvec, record_ratio, vec3, vec4, with, SENTINEL_STEPS, SENTINEL_TOLERANCE};
use crate::constraint::{embed, invariant_norm, pi_from_p, xi_directional_derivative, xi_from_x, xi_jacobian, Axis, ConstraintVector};
use crate::finite_diff::{finite_difference_gradient4, FIRST_DERIVATIVE_STEP};
use crate::minkowski::{general_boost, perp_projection, BoundSystem, FourVector};
use crate::registry::Named;
use crate::verify::{Sampler, Source, Suite, SuiteConfig, SuiteReport};
use crate::Result;

const NAME: &str = "invariance";

/// Points at which the derivative identity is checked.
const DERIVATIVE_POINTS: usize = 100;

pub struct InvarianceSuite;

impl Named for InvarianceSuite {
    fn name(&self) -> &'static str {
        NAME
    }
}

fn positive_or_one(x: f64) -> f64 {
    if x > 0.0 {
        x
    } else {
        1.0
    }
}

impl Suite for InvarianceSuite {
    fn description(&self) -> &'static str {
        "constraint-coordinate norms and products agree between boosted frames; projections are orthogonal to P; dξ_j/dξ_i = δ_ij"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let mut rng = Sampler::new(cfg.seed, 1);
        let mut xi_norm = cfg.check(NAME, "xi-norm", 1e-9);
        let mut pi_norm = cfg.check(NAME, "pi-norm", 1e-9);
        let mut xi_dot_pi = cfg.check(NAME, "xi-dot-pi", 1e-9);
        let mut invariant = cfg.check(NAME, "invariant-norm", 1e-10);
        let mut orthogonal = cfg.check(NAME, "orthogonality", 1e-10);
        let mut identity_exact = cfg.check(NAME, "xi-derivative-identity-analytic", 1e-12);
        let mut identity_fd = cfg.check(NAME, "xi-derivative-identity-finite-difference", 1e-6);
        let mut square_fd = cfg.check(NAME, "xi-squared-derivative-finite-difference", 1e-6);
        let mut sentinel = cfg.check(NAME, "finite-difference-order", SENTINEL_TOLERANCE);

        for trial in 0..cfg.trials {
            let sys_a = rng.system(cfg.vmax)?;
            let x = rng.four_vector();
            let p = rng.four_vector();
            let u = rng.velocity(cfg.vmax);
            let sys_b = sys_a.boosted(&u)?;
            let xb = general_boost(&x, &u)?;
            let pb = general_boost(&p, &u)?;
            let (xi_a, pi_a) = (xi_from_x(&x, &sys_a), pi_from_p(&p, &sys_a));
            let (xi_b, pi_b) = (xi_from_x(&xb, &sys_b), pi_from_p(&pb, &sys_b));
            let inputs = json!({
                "trial": trial,
                "m1": sys_a.m1(),
                "m2": sys_a.m2(),
                "sigma": sys_a.sigma(),
                "v_system": sys_a.velocity(),
                "boost": u,
                "x": x.0,
                "p": p.0,
            });
            let label = format!("trial {trial}");
            xi_norm.real(&label, inputs.clone(), xi_b.norm_sq(), xi_a.norm_sq(), positive_or_one(xi_a.norm_sq()), Source::CrossCheck);
            pi_norm.real(&label, inputs.clone(), pi_b.norm_sq(), pi_a.norm_sq(), positive_or_one(pi_a.norm_sq()), Source::CrossCheck);
            xi_dot_pi.real(
                &label,
                inputs.clone(),
                xi_b.dot(&pi_b),
                xi_a.dot(&pi_a),
                positive_or_one(xi_a.norm() * pi_a.norm()),
                Source::CrossCheck,
            );
            for (frame, w, sys, xi) in [("A", &x, &sys_a, &xi_a), ("B", &xb, &sys_b, &xi_b)] {
                invariant.real(
                    format!("{label} frame {frame}"),
                    inputs.clone(),
                    xi.norm_sq(),
                    invariant_norm(w, sys),
                    positive_or_one(xi.norm_sq()),
                    Source::Exact,
                );
            }
            for (frame, sys, w) in [("A", &sys_a, &x), ("A", &sys_a, &p), ("B", &sys_b, &xb), ("B", &sys_b, &pb)] {
                let big_p = sys.total_momentum();
                let perp = perp_projection(w, &big_p, sys.rest_mass())?;
                orthogonal.real(
                    format!("{label} frame {frame}"),
                    with(inputs.clone(), json!({"w": w.0})),
                    big_p.dot(&perp),
                    0.0,
                    positive_or_one(big_p.euclidean_norm() * perp.euclidean_norm()),
                    Source::Exact,
                );
            }
            if trial < DERIVATIVE_POINTS {
                derivative_cases(&sys_b, &xb, &label, &inputs, &mut identity_exact, &mut identity_fd, &mut square_fd);
            }
            if trial == 0 {
                let bulk = embed(&ConstraintVector([0.7, -0.4, 0.5]), &sys_b);
                sentinel_case(&sys_b, &bulk, &mut sentinel);
            }
        }
        Ok(SuiteReport::new(
            NAME,
            vec![
                xi_norm.finish(),
                pi_norm.finish(),
                xi_dot_pi.finish(),
                invariant.finish(),
                orthogonal.finish(),
                identity_exact.finish(),
                identity_fd.finish(),
                square_fd.finish(),
                sentinel.finish(),
            ],
        ))
    }
}

fn derivative_cases(
    sys: &BoundSystem,
    x: &FourVector,
    label: &str,
    inputs: &serde_json::Value,
    exact: &mut crate::verify::Check,
    fd: &mut crate::verify::Check,
    square: &mut crate::verify::Check,
) {
    let jac = xi_jacobian(sys);
    for j in Axis::ALL {
        let analytic = FourVector(jac[j.index()]);
        let numeric = finite_difference_gradient4(|y| xi_from_x(y, sys).0[j.index()], x, FIRST_DERIVATIVE_STEP);
        for i in Axis::ALL {
            let delta = if i == j { 1.0 } else { 0.0 };
            let case = format!("{label} d xi_{} / d xi_{}", j.index() + 1, i.index() + 1);
            exact.real(&case, inputs.clone(), xi_directional_derivative(&analytic, i, sys), delta, 1.0, Source::Analytic);
            fd.real(&case, inputs.clone(), xi_directional_derivative(&numeric, i, sys), delta, 1.0, Source::FiniteDifference);
        }
    }
    let xi = xi_from_x(x, sys);
    let grad = finite_difference_gradient4(|y| xi_from_x(y, sys).norm_sq(), x, FIRST_DERIVATIVE_STEP);
    for i in Axis::ALL {
        square.real(
            format!("{label} d |xi|^2 / d xi_{}", i.index() + 1),
            with(inputs.clone(), json!({"xi": cvec(&xi)})),
            xi_directional_derivative(&grad, i, sys),
            2.0 * xi.0[i.index()],
            2.0 * xi.norm().max(1.0),
            Source::FiniteDifference,
        );
    }
}

/// `∂/∂ξ_1` of `exp(−|ξ|²/2)` by differences at two steps.
fn sentinel_case(sys: &BoundSystem, x: &FourVector, check: &mut crate::verify::Check) {
    let field = |y: &FourVector| (-0.5 * xi_from_x(y, sys).norm_sq()).exp();
    let xi = xi_from_x(x, sys);
    let exact = -xi.0[0] * field(x);
    let err = |h: f64| {
        let g = finite_difference_gradient4(field, x, h);
        (xi_directional_derivative(&g, Axis::ALL[0], sys) - exact).abs()
    };
    let (h1, h2) = SENTINEL_STEPS;
    record_ratio(
        check,
        "d exp(-|xi|^2/2) / d xi_1",
        json!({"x": vec4(x), "v_system": vec3(&sys.velocity()), "steps": [h1, h2]}),
        err(h1),
        err(h2),
        Source::FiniteDifference,
    );
}
