//! Serializable verification reports.
//!
//! A [`VerificationReport`] covers one check at one tolerance; a
//! [`SuiteReport`] groups the checks of one suite. Struct fields serialize
//! in declaration order and JSON objects built here use sorted keys, so a
//! fixed seed gives byte-identical output.

use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

/// Where the expected value of a case comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A closed-form identity or exact value.
    Exact,
    /// Closed-form derivatives of the wavefunctions.
    Analytic,
    /// Central finite differences.
    FiniteDifference,
    /// Gauss–Hermite quadrature.
    Quadrature,
    /// A series expansion in a small parameter.
    Expansion,
    /// An independent evaluation of the same quantity (another frame, another formula).
    CrossCheck,
}

/// JSON number, or the strings `"nan"`, `"inf"`, `"-inf"` for non-finite values.
pub fn number(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else if x.is_nan() {
        json!("nan")
    } else if x > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

pub fn complex(z: Complex64) -> Value {
    json!([number(z.re), number(z.im)])
}

fn finite_or_string<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    number(*x).serialize(s)
}

fn de_number<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    let v = Value::deserialize(d)?;
    match &v {
        Value::Number(n) => n.as_f64().ok_or_else(|| serde::de::Error::custom("bad number")),
        Value::String(s) if s == "inf" => Ok(f64::INFINITY),
        Value::String(s) if s == "-inf" => Ok(f64::NEG_INFINITY),
        Value::String(s) if s == "nan" => Ok(f64::NAN),
        _ => Err(serde::de::Error::custom("expected a number")),
    }
}

/// One evaluated case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub label: String,
    pub inputs: Value,
    pub observed: Value,
    pub expected: Value,
    #[serde(serialize_with = "finite_or_string", deserialize_with = "de_number")]
    pub abs_err: f64,
    #[serde(serialize_with = "finite_or_string", deserialize_with = "de_number")]
    pub rel_err: f64,
    pub source: Source,
}

/// Outcome of one check. `pass` holds iff `max_rel_err ≤ tolerance` and the
/// quadrature order was adequate for every case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub check: String,
    #[serde(serialize_with = "finite_or_string", deserialize_with = "de_number")]
    pub tolerance: f64,
    pub cases_run: usize,
    #[serde(serialize_with = "finite_or_string", deserialize_with = "de_number")]
    pub max_abs_err: f64,
    #[serde(serialize_with = "finite_or_string", deserialize_with = "de_number")]
    pub max_rel_err: f64,
    pub insufficient_order: bool,
    pub pass: bool,
    pub cases: Vec<CaseRecord>,
}

/// All checks of one suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn new(suite: &str, checks: Vec<VerificationReport>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn check(&self, name: &str) -> Option<&VerificationReport> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn failing_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.check.as_str()).collect()
    }
}

/// Accumulates cases for one check.
#[derive(Debug, Clone)]
pub struct Check {
    suite: String,
    name: String,
    tolerance: f64,
    insufficient_order: bool,
    cases: Vec<CaseRecord>,
}

impl Check {
    pub fn new(suite: &str, name: &str, tolerance: f64) -> Self {
        Check {
            suite: suite.to_string(),
            name: name.to_string(),
            tolerance,
            insufficient_order: false,
            cases: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Records a case with `rel_err = |observed − expected| / reference`.
    pub fn real(&mut self, label: impl Into<String>, inputs: Value, observed: f64, expected: f64, reference: f64, source: Source) {
        self.push(label.into(), inputs, number(observed), number(expected), (observed - expected).abs(), reference, source);
    }

    /// Complex variant of [`Check::real`].
    pub fn complex(
        &mut self,
        label: impl Into<String>,
        inputs: Value,
        observed: Complex64,
        expected: Complex64,
        reference: f64,
        source: Source,
    ) {
        self.push(label.into(), inputs, complex(observed), complex(expected), (observed - expected).norm(), reference, source);
    }

    /// Records a case whose error is already a relative measure, e.g. the
    /// distance of a convergence ratio from its target.
    pub fn measure(&mut self, label: impl Into<String>, inputs: Value, observed: f64, expected: f64, rel_err: f64, source: Source) {
        let abs_err = (observed - expected).abs();
        self.cases.push(CaseRecord {
            label: label.into(),
            inputs,
            observed: number(observed),
            expected: number(expected),
            abs_err: sanitize(abs_err),
            rel_err: sanitize(rel_err),
            source,
        });
    }

    #[allow(clippy::too_many_arguments)]
    fn push(&mut self, label: String, inputs: Value, observed: Value, expected: Value, abs_err: f64, reference: f64, source: Source) {
        let rel_err = if reference > 0.0 { abs_err / reference } else { abs_err };
        self.cases.push(CaseRecord {
            label,
            inputs,
            observed,
            expected,
            abs_err: sanitize(abs_err),
            rel_err: sanitize(rel_err),
            source,
        });
    }

    /// Marks the check as run below its trusted quadrature order.
    pub fn flag_insufficient_order(&mut self) {
        self.insufficient_order = true;
    }

    pub fn finish(self) -> VerificationReport {
        let max_abs_err = self.cases.iter().map(|c| c.abs_err).fold(0.0, f64::max);
        let max_rel_err = self.cases.iter().map(|c| c.rel_err).fold(0.0, f64::max);
        VerificationReport {
            pass: max_rel_err <= self.tolerance && !self.insufficient_order,
            suite: self.suite,
            check: self.name,
            tolerance: self.tolerance,
            cases_run: self.cases.len(),
            max_abs_err,
            max_rel_err,
            insufficient_order: self.insufficient_order,
            cases: self.cases,
        }
    }
}

// NaN becomes +inf.
fn sanitize(x: f64) -> f64 {
    if x.is_nan() {
        f64::INFINITY
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_flag_and_nan() {
        let mut c = Check::new("s", "c", 1e-6);
        c.real("a", json!({}), 1.0, 1.0 + 1e-9, 1.0, Source::Exact);
        let r = c.clone().finish();
        assert!(r.pass);
        c.real("b", json!({}), f64::NAN, 1.0, 1.0, Source::Exact);
        let r = c.finish();
        assert!(!r.pass);
        assert_eq!(r.max_rel_err, f64::INFINITY);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"max_rel_err\":\"inf\""));
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.max_rel_err, f64::INFINITY);
    }

    #[test]
    fn insufficient_order_fails() {
        let mut c = Check::new("s", "c", 1.0);
        c.real("a", json!({}), 0.0, 0.0, 1.0, Source::Quadrature);
        c.flag_insufficient_order();
        assert!(!c.finish().pass);
    }
}
