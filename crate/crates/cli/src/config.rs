//! Run configuration: defaults, an optional JSON file, then flags.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use rqcm::minkowski::lorentz_factor;
use rqcm::oscillator::{OscillatorState, QuantumNumbers};
use rqcm::tabulate::GridSpec;
use rqcm::transforms::{MAX_ORDER, MIN_ORDER};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Everything a command may need. Keys match the config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub m1: f64,
    pub m2: f64,
    pub omega: f64,
    pub l: [i64; 3],
    pub v: [f64; 3],
    pub grid: GridSpec,
    pub representation: String,
    pub order: usize,
    pub seed: u64,
    pub format: Format,
    pub tolerances: BTreeMap<String, f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m1: 1.0,
            m2: 1.0,
            omega: 1.0,
            l: [0; 3],
            v: [0.0; 3],
            grid: GridSpec::default(),
            representation: "position".into(),
            order: 32,
            seed: rqcm::verify::SuiteConfig::default().seed,
            format: Format::Csv,
            tolerances: BTreeMap::new(),
        }
    }
}

impl RunConfig {
    /// Defaults overlaid with the file at `path`, when given.
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        match path {
            None => Ok(RunConfig::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", p.display())))?;
                serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid config {}: {e}", p.display())))
            }
        }
    }

    /// Checks the invariants every command relies on.
    pub fn validate(&self) -> Result<(), CliError> {
        lorentz_factor(&self.v).map_err(|e| CliError::Usage(format!("frame velocity: {e}")))?;
        self.grid.validate().map_err(|e| CliError::Usage(format!("grid: {e}")))?;
        if !(MIN_ORDER..=MAX_ORDER).contains(&self.order) {
            return Err(CliError::Usage(format!("order must be in {MIN_ORDER}..={MAX_ORDER}, got {}", self.order)));
        }
        Ok(())
    }

    pub fn quanta(&self) -> Result<QuantumNumbers, CliError> {
        QuantumNumbers::from_signed(self.l).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn state(&self) -> Result<OscillatorState, CliError> {
        OscillatorState::new(self.quanta()?, self.omega, self.m1, self.m2, self.v).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let cfg: RunConfig = serde_json::from_str(r#"{"m1": 2.0, "grid": {"axis": "pi2", "min": -1, "max": 1, "samples": 5}}"#).unwrap();
        assert_eq!(cfg.m1, 2.0);
        assert_eq!(cfg.m2, 1.0);
        assert_eq!(cfg.grid.axis, "pi2");
        assert!(serde_json::from_str::<RunConfig>(r#"{"mass": 1}"#).is_err());
    }

    #[test]
    fn validation() {
        let mut cfg = RunConfig::default();
        cfg.validate().unwrap();
        cfg.v = [0.0, 0.0, 1.0];
        assert!(cfg.validate().is_err());
        cfg.v = [0.0; 3];
        cfg.order = 0;
        assert!(cfg.validate().is_err());
        cfg.order = 32;
        cfg.l = [-1, 0, 0];
        assert!(cfg.quanta().is_err());
    }
}
