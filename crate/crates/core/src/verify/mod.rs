//! Verification suites.
//!
//! Each suite draws its cases from a seeded [`Sampler`], evaluates a set of
//! named checks and returns a [`SuiteReport`]. Suites are trait objects held
//! in a [`Registry`] and selected by name (`invariance`, `pde`, `ladder`,
//! `nr-limit`, `transforms`).

pub mod report;
pub mod sampling;
pub mod suites;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::registry::{Named, Registry};
use crate::transforms::KernelSign;

pub use crate::finite_diff::finite_difference_gradient4;
pub use report::{CaseRecord, Check, Source, SuiteReport, VerificationReport};
pub use sampling::Sampler;

/// How four-space derivatives are obtained. The serialized names match the
/// derivative-supplier registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DerivativeMode {
    Analytic,
    FiniteDifference,
}

impl DerivativeMode {
    pub fn supplier_name(self) -> &'static str {
        match self {
            DerivativeMode::Analytic => "analytic",
            DerivativeMode::FiniteDifference => "finite-difference",
        }
    }
}

/// Parameters shared by all suites. Each suite reads the fields it needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random draws for the invariance and mass-limit suites.
    pub trials: usize,
    /// Largest speed for the frame-invariance draws.
    pub vmax: f64,
    /// Largest system speed for the PDE and ladder suites.
    pub frame_vmax: f64,
    /// Highest oscillator level for the PDE, ladder and transform suites.
    pub max_n: u32,
    /// Highest level for normalization integrals.
    pub normalization_max_n: u32,
    /// Random points per state.
    pub points: usize,
    /// Restricts the PDE suite to one derivative mode; both when absent.
    pub pde_mode: Option<DerivativeMode>,
    /// Shift of σ, in units of Ω, used in the PDE residuals.
    pub sigma_perturb: f64,
    /// Base quadrature order for the transform suite.
    pub order: usize,
    pub kernel_sign: KernelSign,
    /// Per-check tolerance overrides keyed by check name.
    pub tolerances: BTreeMap<String, f64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 20_240_917,
            trials: 1000,
            vmax: 0.99,
            frame_vmax: 0.9,
            max_n: 4,
            normalization_max_n: 6,
            points: 20,
            pde_mode: None,
            sigma_perturb: 0.0,
            order: 32,
            kernel_sign: KernelSign::Plus,
            tolerances: BTreeMap::new(),
        }
    }
}

impl SuiteConfig {
    /// Tolerance for `check`, honouring overrides.
    pub fn tolerance(&self, check: &str, default: f64) -> f64 {
        self.tolerances.get(check).copied().unwrap_or(default)
    }

    /// A fresh [`Check`] with the effective tolerance.
    pub fn check(&self, suite: &str, name: &str, default_tolerance: f64) -> Check {
        Check::new(suite, name, self.tolerance(name, default_tolerance))
    }
}

/// A named property suite.
pub trait Suite: Named + Send + Sync {
    fn description(&self) -> &'static str;

    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport>;
}

/// Registry of all suites, in the order `verify all` runs them.
pub fn suites() -> Registry<dyn Suite> {
    let mut reg: Registry<dyn Suite> = Registry::new("suite");
    reg.register(Box::new(suites::InvarianceSuite));
    reg.register(Box::new(suites::PdeSuite));
    reg.register(Box::new(suites::LadderSuite));
    reg.register(Box::new(suites::NrLimitSuite));
    reg.register(Box::new(suites::TransformSuite));
    reg
}

/// Runs the named suite, or every suite for `all`.
pub fn run(name: &str, config: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    let reg = suites();
    if name == "all" {
        reg.iter().map(|s| s.run(config)).collect()
    } else {
        Ok(vec![reg.get(name)?.run(config)?])
    }
}

pub fn run_invariance_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    suites::InvarianceSuite.run(config)
}

pub fn run_pde_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    suites::PdeSuite.run(config)
}

pub fn run_ladder_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    suites::LadderSuite.run(config)
}

pub fn run_nr_limit_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    suites::NrLimitSuite.run(config)
}

pub fn run_transform_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    suites::TransformSuite.run(config)
}
