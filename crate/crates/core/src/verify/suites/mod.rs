//! The built-in suites.

mod invariance;
mod ladder;
mod nr_limit;
mod pde;
mod transforms;

pub use invariance::InvarianceSuite;
pub use ladder::LadderSuite;
pub use nr_limit::NrLimitSuite;
pub use pde::PdeSuite;
pub use transforms::TransformSuite;

use serde_json::{json, Value};

use super::sampling::Sampler;
use crate::constraint::ConstraintVector;
use crate::minkowski::FourVector;
use crate::oscillator::{OscillatorState, QuantumNumbers};
use crate::Result;

/// Spring constants are drawn from this range.
pub(crate) const OMEGA_RANGE: (f64, f64) = (0.5, 2.0);

/// Constraint points are drawn with `|ξ_i| ≤ XI_SPAN/√Ω`, where the
/// oscillator functions are not negligible.
pub(crate) const XI_SPAN: f64 = 2.5;

pub(crate) fn xi_radius(omega: f64) -> f64 {
    XI_SPAN / omega.sqrt()
}

/// Random masses and spring constant for `quanta`, moving with `v`.
pub(crate) fn random_state(sampler: &mut Sampler, quanta: QuantumNumbers, v: [f64; 3]) -> Result<OscillatorState> {
    let (m1, m2) = sampler.masses();
    let omega = sampler.uniform(OMEGA_RANGE.0, OMEGA_RANGE.1);
    OscillatorState::new(quanta, omega, m1, m2, v)
}

pub(crate) fn vec3(v: &[f64; 3]) -> Value {
    json!(v)
}

pub(crate) fn vec4(v: &FourVector) -> Value {
    json!(v.0)
}

pub(crate) fn cvec(v: &ConstraintVector) -> Value {
    json!(v.0)
}

pub(crate) fn state_inputs(state: &OscillatorState) -> Value {
    let sys = state.system();
    json!({
        "l": state.quanta().as_array(),
        "m1": sys.m1(),
        "m2": sys.m2(),
        "omega": state.omega(),
        "v": sys.velocity(),
    })
}

/// Adds `extra` keys to an inputs object.
pub(crate) fn with(mut base: Value, extra: Value) -> Value {
    if let (Some(b), Value::Object(e)) = (base.as_object_mut(), extra) {
        for (k, v) in e {
            b.insert(k, v);
        }
    }
    base
}

/// Relative step pair for the O(h²) sentinels.
pub(crate) const SENTINEL_STEPS: (f64, f64) = (1e-2, 5e-3);

/// Error ratio `e(h)/e(h/2)` is expected within `4 ± SENTINEL_RATIO_SLACK`.
pub(crate) const SENTINEL_RATIO_SLACK: f64 = 0.5;

/// Records a convergence-ratio case: rel_err is `|ratio − 4| / 4`, so a
/// tolerance of `SENTINEL_RATIO_SLACK/4` accepts ratios in `[3.5, 4.5]`.
pub(crate) fn record_ratio(check: &mut super::Check, label: &str, inputs: Value, coarse: f64, fine: f64, source: super::Source) {
    let ratio = coarse / fine;
    check.measure(
        label,
        with(inputs, json!({"coarse_err": coarse, "fine_err": fine})),
        ratio,
        4.0,
        (ratio - 4.0).abs() / 4.0,
        source,
    );
}

pub(crate) const SENTINEL_TOLERANCE: f64 = SENTINEL_RATIO_SLACK / 4.0;
