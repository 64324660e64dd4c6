//! Central finite differences over four-space and the derivative suppliers
//! used by the explicit ladder operators.
//!
//! Steps are scaled per component as `h · max(1, |x_μ|)`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::minkowski::{ComplexFourVector, FourVector};
use crate::registry::{Named, Registry};

/// Default relative step for first derivatives.
pub const FIRST_DERIVATIVE_STEP: f64 = 1e-6;

/// Default relative step for second derivatives.
pub const SECOND_DERIVATIVE_STEP: f64 = 1e-4;

/// Values a field may take (real or complex).
pub trait FieldValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}

impl FieldValue for f64 {}
impl FieldValue for Complex64 {}

fn scaled_step(h: f64, c: f64) -> f64 {
    h * c.abs().max(1.0)
}

/// Central-difference gradient `∂f/∂x^μ` over the stored components.
pub fn gradient4<T: FieldValue>(field: impl Fn(&FourVector) -> T, x: &FourVector, h: f64) -> [T; 4] {
    std::array::from_fn(|mu| {
        let step = scaled_step(h, x.0[mu]);
        let mut fwd = *x;
        let mut bwd = *x;
        fwd.0[mu] += step;
        bwd.0[mu] -= step;
        (field(&fwd) - field(&bwd)) * (0.5 / step)
    })
}

/// Real-valued gradient as a [`FourVector`]; error is O(h²).
pub fn finite_difference_gradient4(
    field: impl Fn(&FourVector) -> f64,
    x: &FourVector,
    h: f64,
) -> FourVector {
    FourVector(gradient4(field, x, h))
}

/// First derivative along `dir` with step `h` (not rescaled).
pub fn directional_first<T: FieldValue>(
    field: impl Fn(&FourVector) -> T,
    x: &FourVector,
    dir: &FourVector,
    h: f64,
) -> T {
    (field(&(*x + *dir * h)) - field(&(*x - *dir * h))) * (0.5 / h)
}

/// Second derivative along `dir` with step `h` (not rescaled).
pub fn directional_second<T: FieldValue>(
    field: impl Fn(&FourVector) -> T,
    x: &FourVector,
    dir: &FourVector,
    h: f64,
) -> T {
    let centre = field(x);
    (field(&(*x + *dir * h)) - centre * 2.0 + field(&(*x - *dir * h))) * (1.0 / (h * h))
}

/// Five-point second derivative along `dir`, error O(h⁴).
pub fn directional_second_fourth_order<T: FieldValue>(
    field: impl Fn(&FourVector) -> T,
    x: &FourVector,
    dir: &FourVector,
    h: f64,
) -> T {
    let at = |k: f64| field(&(*x + *dir * (k * h)));
    (at(1.0) * 16.0 + at(-1.0) * 16.0 - at(2.0) - at(-2.0) - at(0.0) * 30.0) * (1.0 / (12.0 * h * h))
}

/// `□f = Σ_μ η^μμ ∂²f/∂x^μ²` from per-axis second differences.
pub fn d_alembertian<T: FieldValue>(field: impl Fn(&FourVector) -> T, x: &FourVector, h: f64) -> T {
    let second = |mu: usize| directional_second(&field, x, &FourVector::unit(mu), h);
    second(0) + second(1) + second(2) - second(3)
}

/// A complex scalar field on four-space.
pub trait Field4 {
    fn value(&self, x: &FourVector) -> Complex64;

    /// `∂f/∂x^μ` in closed form, when known.
    fn analytic_gradient(&self, _x: &FourVector) -> Option<ComplexFourVector> {
        None
    }
}

/// Adapts a closure into a [`Field4`] without an analytic gradient.
pub struct FnField<F>(pub F);

impl<F: Fn(&FourVector) -> Complex64> Field4 for FnField<F> {
    fn value(&self, x: &FourVector) -> Complex64 {
        (self.0)(x)
    }
}

/// Source of four-gradients for operators that need `∂ψ/∂x^μ`.
pub trait DerivativeSupplier: Named + Send + Sync {
    fn gradient(&self, field: &dyn Field4, x: &FourVector) -> Result<ComplexFourVector>;
}

/// Uses the field's closed-form gradient.
#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyticDerivatives;

impl Named for AnalyticDerivatives {
    fn name(&self) -> &'static str {
        "analytic"
    }
}

impl DerivativeSupplier for AnalyticDerivatives {
    fn gradient(&self, field: &dyn Field4, x: &FourVector) -> Result<ComplexFourVector> {
        field
            .analytic_gradient(x)
            .ok_or_else(|| Error::Precondition("field has no analytic gradient".into()))
    }
}

/// Central differences with relative step `step`.
#[derive(Debug, Clone, Copy)]
pub struct CentralDifferences {
    pub step: f64,
}

impl Default for CentralDifferences {
    fn default() -> Self {
        CentralDifferences {
            step: FIRST_DERIVATIVE_STEP,
        }
    }
}

impl Named for CentralDifferences {
    fn name(&self) -> &'static str {
        "finite-difference"
    }
}

impl DerivativeSupplier for CentralDifferences {
    fn gradient(&self, field: &dyn Field4, x: &FourVector) -> Result<ComplexFourVector> {
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(Error::Domain(format!("step must be positive, got {}", self.step)));
        }
        Ok(ComplexFourVector(gradient4(|y| field.value(y), x, self.step)))
    }
}

/// Registry holding `analytic` and `finite-difference`.
pub fn derivative_suppliers() -> Registry<dyn DerivativeSupplier> {
    let mut reg: Registry<dyn DerivativeSupplier> = Registry::new("derivative supplier");
    reg.register(Box::new(AnalyticDerivatives));
    reg.register(Box::new(CentralDifferences::default()));
    reg
}
