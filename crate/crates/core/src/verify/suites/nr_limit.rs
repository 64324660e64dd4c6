//! Non-relativistic limit of the bound rest mass and ladder operators.

use serde_json::json;

use super::record_ratio;
use crate::constraint::Axis;
use crate::minkowski::{reduced_mass, rest_mass, MassBranch};
use crate::oscillator::{nr_spring_constant, rest_frame_ladder_coefficients, schrodinger_ladder_coefficients, LadderDirection};
use crate::registry::Named;
use crate::verify::{Sampler, Source, Suite, SuiteConfig, SuiteReport};
use crate::Result;

const NAME: &str = "nr-limit";

const FREE_PAIRS: usize = 100;
const CONVERGENCE_PAIRS: usize = 20;
const LADDER_PAIRS: usize = 20;

/// Starting σ of the halving sequence, in units of `m1 m2`.
const SIGMA_START: f64 = 1e-3;

/// The worked example `(m1, m2, σ) = (1, 1, 10⁻³)` and its absolute bound.
const EXAMPLE: (f64, f64, f64) = (1.0, 1.0, 1e-3);
const EXAMPLE_BOUND: f64 = 5e-6;

/// Remainder tolerance of the ratio test, `|r − 4|/4 ≤ 1/8`.
const RATIO_TOLERANCE: f64 = 0.125;

pub struct NrLimitSuite;

impl Named for NrLimitSuite {
    fn name(&self) -> &'static str {
        NAME
    }
}

/// `M0 − (m1 + m2 + σ/m_r)` on the MINUS branch.
fn remainder(m1: f64, m2: f64, sigma: f64) -> Result<f64> {
    Ok(rest_mass(m1, m2, sigma, MassBranch::Minus)? - (m1 + m2 + sigma / reduced_mass(m1, m2)))
}

impl Suite for NrLimitSuite {
    fn description(&self) -> &'static str {
        "free-particle rest mass, quadratic approach of M0 to m1 + m2 + σ/m_r, and rest-frame ladder operators matching the Schrödinger form with Ω = m_r ω"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let mut rng = Sampler::new(cfg.seed, 4);
        let mut free = cfg.check(NAME, "free-particle-mass", 1e-12);
        let mut quadratic = cfg.check(NAME, "quadratic-convergence", RATIO_TOLERANCE);
        let mut example = cfg.check(NAME, "nr-example", EXAMPLE_BOUND);
        let mut ladder = cfg.check(NAME, "ladder-coefficients", 1e-12);

        for k in 0..FREE_PAIRS {
            let (m1, m2) = rng.masses();
            let m0 = rest_mass(m1, m2, 0.0, MassBranch::Minus)?;
            free.real(format!("pair {k}"), json!({"m1": m1, "m2": m2, "sigma": 0.0}), m0, m1 + m2, m1 + m2, Source::Exact);
        }

        for k in 0..CONVERGENCE_PAIRS {
            let (m1, m2) = rng.masses();
            let sigma = SIGMA_START * m1 * m2;
            let coarse = remainder(m1, m2, sigma)?.abs();
            let fine = remainder(m1, m2, 0.5 * sigma)?.abs();
            record_ratio(
                &mut quadratic,
                &format!("pair {k}"),
                json!({"m1": m1, "m2": m2, "sigma": [sigma, 0.5 * sigma]}),
                coarse,
                fine,
                Source::Expansion,
            );
        }

        let (m1, m2, sigma) = EXAMPLE;
        let m0 = rest_mass(m1, m2, sigma, MassBranch::Minus)?;
        example.real(
            "(1, 1, 1e-3)",
            json!({"m1": m1, "m2": m2, "sigma": sigma}),
            m0,
            m1 + m2 + sigma / reduced_mass(m1, m2),
            0.0,
            Source::Expansion,
        );

        for k in 0..LADDER_PAIRS {
            let (m1, m2) = rng.masses();
            let omega_nr = rng.uniform(0.2, 2.0);
            let m_r = reduced_mass(m1, m2);
            let omega = nr_spring_constant(m_r, omega_nr);
            for dir in [LadderDirection::Lower, LadderDirection::Raise] {
                let want = schrodinger_ladder_coefficients(dir, m_r, omega_nr);
                for axis in Axis::ALL {
                    let got = rest_frame_ladder_coefficients(dir, axis, omega, m1, m2)?;
                    let inputs = json!({
                        "m1": m1, "m2": m2, "omega_nr": omega_nr, "omega": omega,
                        "direction": format!("{dir:?}").to_lowercase(), "axis": axis.index() + 1,
                    });
                    for (part, g, w) in [
                        ("prefactor", got.prefactor, want.prefactor),
                        ("derivative", got.derivative, want.derivative),
                        ("position", got.position, want.position),
                    ] {
                        ladder.real(
                            format!("pair {k} {dir:?} axis {} {part}", axis.index() + 1),
                            inputs.clone(),
                            g,
                            w,
                            w.abs().max(1e-300),
                            Source::Exact,
                        );
                    }
                }
            }
        }

        Ok(SuiteReport::new(
            NAME,
            vec![free.finish(), quadratic.finish(), example.finish(), ladder.finish()],
        ))
    }
}
