//! Ladder operators in four-space against their eigenvalue relations.

use num_complex::Complex64;
use serde_json::json;

use super::{random_state, record_ratio, state_inputs, vec4, with, xi_radius, SENTINEL_TOLERANCE};
use crate::constraint::{xi_from_x, Axis, ConstraintVector};
use crate::finite_diff::{derivative_suppliers, CentralDifferences, DerivativeSupplier, Field4, FnField};
use crate::minkowski::{BoundSystem, FourVector};
use crate::oscillator::{
    explicit_ladder, ladder_apply, ladder_apply_explicit, ladder_from_four_d, number_from_ladders, InternalField, LadderDirection,
    OscillatorState, QuantumNumbers,
};
use crate::registry::Named;
use crate::verify::{Check, Sampler, Source, Suite, SuiteConfig, SuiteReport};
use crate::Result;

const NAME: &str = "ladder";

const DIRECTIONS: [LadderDirection; 2] = [LadderDirection::Lower, LadderDirection::Raise];

/// Highest level for the exact coefficient identities.
const IDENTITY_MAX_N: u32 = 6;

/// Random constrained test fields per state for the decomposition check.
const TEST_FIELDS: usize = 2;

/// Steps of the ladder convergence sentinel.
const SENTINEL_STEPS: (f64, f64) = (1e-3, 5e-4);

pub struct LadderSuite;

impl Named for LadderSuite {
    fn name(&self) -> &'static str {
        NAME
    }
}

fn direction_name(d: LadderDirection) -> &'static str {
    match d {
        LadderDirection::Raise => "raise",
        LadderDirection::Lower => "lower",
    }
}

/// `exp(−|ξ−c|²/2) cos(k·ξ)`, a smooth function of the constraint coordinates.
#[derive(Debug, Clone, Copy)]
struct TestField {
    centre: ConstraintVector,
    wave: ConstraintVector,
}

impl TestField {
    fn at(&self, xi: &ConstraintVector) -> f64 {
        let d: f64 = (0..3).map(|i| (xi.0[i] - self.centre.0[i]).powi(2)).sum();
        (-0.5 * d).exp() * self.wave.dot(xi).cos()
    }
}

/// Expected `coefficient · φ_new(ξ(x))`, zero when annihilated.
fn eigen_value(direction: LadderDirection, axis: Axis, state: &OscillatorState, x: &FourVector) -> Result<f64> {
    let out = ladder_apply(direction, axis, state)?;
    Ok(match out.state {
        Some(next) => out.coefficient * next.internal_position(&xi_from_x(x, next.system())),
        None => 0.0,
    })
}

struct Points {
    xs: Vec<FourVector>,
}

fn sample(rng: &mut Sampler, state: &OscillatorState, count: usize) -> Points {
    let r = xi_radius(state.omega());
    Points {
        xs: (0..count)
            .map(|_| {
                let xi = rng.xi(r);
                rng.point_over(&xi, state.system())
            })
            .collect(),
    }
}

impl Suite for LadderSuite {
    fn description(&self) -> &'static str {
        "explicit four-space ladder operators reproduce sqrt(l) and sqrt(l+1) pointwise in boosted frames; four-dimensional decomposition; number and commutator identities"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let mut rng = Sampler::new(cfg.seed, 3);
        let suppliers = derivative_suppliers();
        let mut explicit: Vec<(&dyn DerivativeSupplier, Check)> = suppliers
            .iter()
            .map(|s| {
                let tol = if s.name() == "analytic" { 1e-10 } else { 1e-5 };
                (s, cfg.check(NAME, &format!("explicit-vs-eigen-{}", s.name()), tol))
            })
            .collect();
        let mut annihilates = cfg.check(NAME, "lower-annihilates", 1e-8);
        let mut decomposition = cfg.check(NAME, "four-d-decomposition", 1e-5);
        let mut number = cfg.check(NAME, "number-identity", 1e-14);
        let mut commutator = cfg.check(NAME, "commutator", 1e-14);
        let mut round_trip = cfg.check(NAME, "raise-lower-round-trip", 1e-14);
        let mut sentinel = cfg.check(NAME, "finite-difference-order", SENTINEL_TOLERANCE);
        let fd = CentralDifferences::default();

        for quanta in QuantumNumbers::up_to(cfg.max_n) {
            let v = rng.velocity(cfg.frame_vmax);
            let state = random_state(&mut rng, quanta, v)?;
            let points = sample(&mut rng, &state, cfg.points);
            let base = state_inputs(&state);
            let mut expected = Vec::new();
            for x in &points.xs {
                for axis in Axis::ALL {
                    for dir in DIRECTIONS {
                        expected.push(eigen_value(dir, axis, &state, x)?);
                    }
                }
            }
            let scale = expected
                .iter()
                .map(|e| e.abs())
                .fold(1e-3 * state.omega().powf(0.75), f64::max);

            let mut k = 0;
            for (p, x) in points.xs.iter().enumerate() {
                for axis in Axis::ALL {
                    for dir in DIRECTIONS {
                        let want = expected[k];
                        k += 1;
                        let label = format!("{:?} point {p} {} axis {}", quanta.as_array(), direction_name(dir), axis.index() + 1);
                        let inputs = with(base.clone(), json!({"x": vec4(x), "axis": axis.index() + 1, "direction": direction_name(dir)}));
                        for (supplier, check) in explicit.iter_mut() {
                            let source = if supplier.name() == "analytic" { Source::Analytic } else { Source::FiniteDifference };
                            let got = ladder_apply_explicit(dir, axis, &state, x, *supplier)?;
                            check.complex(&label, inputs.clone(), got, Complex64::new(want, 0.0), scale, source);
                        }
                        if dir == LadderDirection::Lower && quanta.get(axis) == 0 {
                            let got = ladder_apply_explicit(dir, axis, &state, x, &fd)?;
                            annihilates.complex(&label, inputs.clone(), got, Complex64::new(0.0, 0.0), state.omega().powf(0.75), Source::FiniteDifference);
                        }
                        let field = InternalField(&state);
                        decomposition_case(&mut decomposition, &label, inputs, &field, dir, axis, state.omega(), state.system(), x, scale)?;
                    }
                }
            }

            for f in 0..TEST_FIELDS {
                let r = xi_radius(state.omega());
                let test = TestField {
                    centre: rng.xi(0.5 * r),
                    wave: rng.xi(1.5),
                };
                let sys = *state.system();
                let field = FnField(move |y: &FourVector| Complex64::new(test.at(&xi_from_x(y, &sys)), 0.0));
                let xi = rng.xi(r);
                let x = rng.point_over(&xi, &sys);
                for axis in Axis::ALL {
                    for dir in DIRECTIONS {
                        let label = format!("{:?} test field {f} {} axis {}", quanta.as_array(), direction_name(dir), axis.index() + 1);
                        let inputs = with(
                            base.clone(),
                            json!({"x": vec4(&x), "centre": test.centre.0, "wave": test.wave.0, "axis": axis.index() + 1}),
                        );
                        decomposition_case(&mut decomposition, &label, inputs, &field, dir, axis, state.omega(), &sys, &x, 1.0)?;
                    }
                }
            }

            if quanta.n() <= IDENTITY_MAX_N {
                identity_cases(&state, &base, &mut number, &mut commutator, &mut round_trip)?;
            }
        }
        if cfg.max_n < IDENTITY_MAX_N {
            for quanta in QuantumNumbers::up_to(IDENTITY_MAX_N).into_iter().filter(|q| q.n() > cfg.max_n) {
                let state = random_state(&mut rng, quanta, [0.0; 3])?;
                let base = state_inputs(&state);
                identity_cases(&state, &base, &mut number, &mut commutator, &mut round_trip)?;
            }
        }

        let v = rng.velocity(cfg.frame_vmax);
        let state = random_state(&mut rng, QuantumNumbers::new(2, 1, 0)?, v)?;
        let x = sample(&mut rng, &state, 1).xs[0];
        sentinel_case(&state, &x, &mut sentinel)?;

        let mut out: Vec<_> = explicit.into_iter().map(|(_, c)| c.finish()).collect();
        out.extend([
            annihilates.finish(),
            decomposition.finish(),
            number.finish(),
            commutator.finish(),
            round_trip.finish(),
            sentinel.finish(),
        ]);
        Ok(SuiteReport::new(NAME, out))
    }
}

#[allow(clippy::too_many_arguments)]
fn decomposition_case(
    check: &mut Check,
    label: &str,
    inputs: serde_json::Value,
    field: &dyn Field4,
    dir: LadderDirection,
    axis: Axis,
    omega: f64,
    sys: &BoundSystem,
    x: &FourVector,
    scale: f64,
) -> Result<()> {
    let grad = CentralDifferences::default().gradient(field, x)?;
    let value = field.value(x);
    let direct = explicit_ladder(dir, axis, omega, sys, x, value, &grad);
    let via_four_d = ladder_from_four_d(dir, axis, omega, sys, x, value, &grad);
    check.complex(label, inputs, via_four_d, direct, scale.max(direct.norm()), Source::FiniteDifference);
    Ok(())
}

fn identity_cases(state: &OscillatorState, base: &serde_json::Value, number: &mut Check, commutator: &mut Check, round_trip: &mut Check) -> Result<()> {
    let quanta = state.quanta();
    for axis in Axis::ALL {
        let l = quanta.get(axis) as f64;
        let label = format!("{:?} axis {}", quanta.as_array(), axis.index() + 1);
        let inputs = with(base.clone(), json!({"axis": axis.index() + 1}));
        number.real(&label, inputs.clone(), number_from_ladders(axis, state)?, l, l.max(1.0), Source::Exact);

        let up = ladder_apply(LadderDirection::Raise, axis, state)?;
        let raised = up.state.expect("raising never annihilates");
        let up_down = up.coefficient * ladder_apply(LadderDirection::Lower, axis, &raised)?.coefficient;
        round_trip.real(&label, inputs.clone(), up_down, l + 1.0, l + 1.0, Source::Exact);

        let down = ladder_apply(LadderDirection::Lower, axis, state)?;
        let down_up = match down.state {
            Some(lowered) => down.coefficient * ladder_apply(LadderDirection::Raise, axis, &lowered)?.coefficient,
            None => 0.0,
        };
        commutator.real(&label, inputs, up_down - down_up, 1.0, 1.0, Source::Exact);
    }
    Ok(())
}

/// Error of the finite-difference explicit operator at two steps.
fn sentinel_case(state: &OscillatorState, x: &FourVector, check: &mut Check) -> Result<()> {
    let axis = Axis::ALL[0];
    let dir = LadderDirection::Raise;
    let want = eigen_value(dir, axis, state, x)?;
    let err = |h: f64| -> Result<f64> {
        let got = ladder_apply_explicit(dir, axis, state, x, &CentralDifferences { step: h })?;
        Ok((got - want).norm())
    };
    let (h1, h2) = SENTINEL_STEPS;
    record_ratio(
        check,
        "raise axis 1",
        with(state_inputs(state), json!({"x": vec4(x), "steps": [h1, h2]})),
        err(h1)?,
        err(h2)?,
        Source::FiniteDifference,
    );
    Ok(())
}
