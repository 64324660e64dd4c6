//! Minkowski four-vectors and two-body kinematics.
//!
//! Components are stored contravariantly, `x^μ = (x1, x2, x3, x4)` with the
//! time-like component last. The metric has signature (+,+,+,−), so lowering
//! an index flips the sign of the fourth component only.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Relative tolerance used by on-shell preconditions (`P·P = −M0²`).
pub const ON_SHELL_TOLERANCE: f64 = 1e-9;

/// Speeds at or above `1 − SPEED_MARGIN` are rejected.
pub const SPEED_MARGIN: f64 = 1e-12;

/// A real contravariant four-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const ZERO: FourVector = FourVector([0.0; 4]);

    pub const fn new(c1: f64, c2: f64, c3: f64, c4: f64) -> Self {
        FourVector([c1, c2, c3, c4])
    }

    /// Builds a vector from a spatial part and a time component.
    pub const fn from_parts(spatial: [f64; 3], time: f64) -> Self {
        FourVector([spatial[0], spatial[1], spatial[2], time])
    }

    /// Unit vector along storage axis `mu` (0..4).
    pub fn unit(mu: usize) -> Self {
        let mut c = [0.0; 4];
        c[mu] = 1.0;
        FourVector(c)
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn time(&self) -> f64 {
        self.0[3]
    }

    /// Covariant components `x_μ = (x1, x2, x3, −x4)`.
    pub fn lowered(&self) -> [f64; 4] {
        [self.0[0], self.0[1], self.0[2], -self.0[3]]
    }

    /// Minkowski product with `other`.
    pub fn dot(&self, other: &FourVector) -> f64 {
        minkowski_dot(self, other)
    }

    /// Euclidean norm of the stored components; used for error scales only.
    pub fn euclidean_norm(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector(self.0.map(|c| -c))
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, rhs: f64) -> FourVector {
        FourVector(self.0.map(|c| c * rhs))
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, rhs: FourVector) -> FourVector {
        rhs * self
    }
}

/// A complex four-vector, the carrier for points `a^μ` of Bargmann 4-space.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ComplexFourVector(pub [Complex64; 4]);

impl ComplexFourVector {
    pub fn new(c1: Complex64, c2: Complex64, c3: Complex64, c4: Complex64) -> Self {
        ComplexFourVector([c1, c2, c3, c4])
    }

    pub fn from_real(v: &FourVector) -> Self {
        ComplexFourVector(v.0.map(|c| Complex64::new(c, 0.0)))
    }

    /// Real part, i.e. the [`FourVector`] this reduces to when all imaginary parts vanish.
    pub fn re(&self) -> FourVector {
        FourVector(self.0.map(|c| c.re))
    }

    pub fn im(&self) -> FourVector {
        FourVector(self.0.map(|c| c.im))
    }

    /// Minkowski contraction with a real vector, `P_μ a^μ`.
    pub fn dot_real(&self, p: &FourVector) -> Complex64 {
        self.0[0] * p.0[0] + self.0[1] * p.0[1] + self.0[2] * p.0[2] - self.0[3] * p.0[3]
    }
}

/// `a·b = a1b1 + a2b2 + a3b3 − a4b4`.
pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> f64 {
    a.0[0] * b.0[0] + a.0[1] * b.0[1] + a.0[2] * b.0[2] - a.0[3] * b.0[3]
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Lorentz factor for a three-velocity, rejecting `|v| ≥ 1 − SPEED_MARGIN`.
pub fn lorentz_factor(v: &[f64; 3]) -> Result<f64> {
    let v2 = dot3(v, v);
    if !v2.is_finite() {
        return Err(domain("velocity has non-finite components"));
    }
    if v2.sqrt() >= 1.0 - SPEED_MARGIN {
        return Err(domain(format!(
            "speed {} is not below the speed of light",
            v2.sqrt()
        )));
    }
    Ok(1.0 / (1.0 - v2).sqrt())
}

/// Pure boost into the frame moving with velocity `v`:
///
/// `x'_i = x_i + γ v_i (γ v·x / (1+γ) − x4)`, `x'_4 = γ (x4 − v·x)`.
pub fn general_boost(x: &FourVector, v: &[f64; 3]) -> Result<FourVector> {
    let gamma = lorentz_factor(v)?;
    let xs = x.spatial();
    let vx = dot3(v, &xs);
    let bracket = gamma * vx / (1.0 + gamma) - x.time();
    Ok(FourVector::new(
        xs[0] + gamma * v[0] * bracket,
        xs[1] + gamma * v[1] * bracket,
        xs[2] + gamma * v[2] * bracket,
        gamma * (x.time() - vx),
    ))
}

/// Sign of the inner square root in the rest-mass condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MassBranch {
    /// `sqrt(S² − D²)`: reproduces `M0 = m1 + m2` at σ = 0 and the
    /// non-relativistic limit `M0 ≈ m1 + m2 + σ/m_r`.
    #[default]
    Minus,
    /// `sqrt(S² + D²)`, the form with the inner sign as typeset in the source
    /// derivation. Kept for audits; it breaks the free-particle limit for
    /// unequal masses.
    Plus,
}

/// Total rest mass of the bound pair for separation constant `sigma`.
///
/// With `S = m1² + m2² + 4σ` and `D = m1² − m2²`,
/// `M0 = sqrt(S ± sqrt(S² ∓ D²))` depending on `branch`.
pub fn rest_mass(m1: f64, m2: f64, sigma: f64, branch: MassBranch) -> Result<f64> {
    check_mass(m1, "m1")?;
    check_mass(m2, "m2")?;
    if !sigma.is_finite() {
        return Err(domain("sigma must be finite"));
    }
    let s = m1 * m1 + m2 * m2 + 4.0 * sigma;
    let inner = match branch {
        // S² − D² written as (S − D)(S + D).
        MassBranch::Minus => (2.0 * m2 * m2 + 4.0 * sigma) * (2.0 * m1 * m1 + 4.0 * sigma),
        MassBranch::Plus => {
            let d = m1 * m1 - m2 * m2;
            s * s + d * d
        }
    };
    if inner < 0.0 {
        return Err(domain(format!(
            "negative inner radicand {inner}: sigma = {sigma} leaves the pair unbound"
        )));
    }
    let outer = s + inner.sqrt();
    if outer <= 0.0 {
        return Err(domain(format!(
            "non-positive outer radicand {outer}: sigma = {sigma} leaves the pair unbound"
        )));
    }
    Ok(outer.sqrt())
}

fn check_mass(m: f64, name: &str) -> Result<()> {
    if !(m.is_finite() && m > 0.0) {
        return Err(domain(format!("{name} must be a positive finite mass, got {m}")));
    }
    Ok(())
}

/// Centre-of-mass weights `η1 = 1/2 + (m1² − m2²)/M0²`, `η2 = 1/2 − (m1² − m2²)/M0²`.
pub fn eta_params(m1: f64, m2: f64, rest_mass: f64) -> Result<(f64, f64)> {
    if !(rest_mass.is_finite() && rest_mass > 0.0) {
        return Err(domain(format!("rest mass must be positive, got {rest_mass}")));
    }
    let shift = (m1 * m1 - m2 * m2) / (rest_mass * rest_mass);
    Ok((0.5 + shift, 0.5 - shift))
}

/// `m_r = m1 m2 / (m1 + m2)`.
pub fn reduced_mass(m1: f64, m2: f64) -> f64 {
    m1 * m2 / (m1 + m2)
}

/// Positive-energy total momentum of mass `rest_mass` moving with velocity `v`:
/// `P = (γM0 v, γM0)`.
pub fn on_shell_momentum(rest_mass: f64, v: &[f64; 3]) -> Result<FourVector> {
    if !(rest_mass.is_finite() && rest_mass > 0.0) {
        return Err(domain(format!("rest mass must be positive, got {rest_mass}")));
    }
    let gamma = lorentz_factor(v)?;
    let gm = gamma * rest_mass;
    Ok(FourVector::new(gm * v[0], gm * v[1], gm * v[2], gm))
}

/// Checks `P·P = −M0²` to relative tolerance `tol` and `P4 > 0`.
pub fn check_on_shell(p: &FourVector, rest_mass: f64, tol: f64) -> Result<()> {
    if !p.is_finite() {
        return Err(Error::Precondition("total momentum is not finite".into()));
    }
    let m2 = rest_mass * rest_mass;
    let defect = (p.dot(p) + m2).abs();
    let scale = m2.max(p.euclidean_norm().powi(2));
    if defect > tol * scale {
        return Err(Error::Precondition(format!(
            "total momentum is off shell: P·P + M0² = {}",
            p.dot(p) + m2
        )));
    }
    if p.time() <= 0.0 {
        return Err(Error::Precondition(
            "total momentum must lie on the positive-energy branch".into(),
        ));
    }
    Ok(())
}

/// A bound two-particle system: masses, separation constant, rest mass,
/// CM weights and its on-shell total momentum in the current frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundSystem {
    m1: f64,
    m2: f64,
    sigma: f64,
    rest_mass: f64,
    eta1: f64,
    eta2: f64,
    total_momentum: FourVector,
}

impl BoundSystem {
    /// System moving with velocity `v`, rest mass from the default branch.
    pub fn new(m1: f64, m2: f64, sigma: f64, v: [f64; 3]) -> Result<Self> {
        Self::with_branch(m1, m2, sigma, MassBranch::Minus, v)
    }

    pub fn at_rest(m1: f64, m2: f64, sigma: f64) -> Result<Self> {
        Self::new(m1, m2, sigma, [0.0; 3])
    }

    pub fn with_branch(
        m1: f64,
        m2: f64,
        sigma: f64,
        branch: MassBranch,
        v: [f64; 3],
    ) -> Result<Self> {
        let rest_mass = rest_mass(m1, m2, sigma, branch)?;
        let total_momentum = on_shell_momentum(rest_mass, &v)?;
        let (eta1, eta2) = eta_params(m1, m2, rest_mass)?;
        Ok(BoundSystem {
            m1,
            m2,
            sigma,
            rest_mass,
            eta1,
            eta2,
            total_momentum,
        })
    }

    /// Same system with an explicitly supplied total momentum, which must be
    /// on shell for this rest mass (relative [`ON_SHELL_TOLERANCE`]).
    pub fn with_momentum(&self, total_momentum: FourVector) -> Result<Self> {
        check_on_shell(&total_momentum, self.rest_mass, ON_SHELL_TOLERANCE)?;
        Ok(BoundSystem {
            total_momentum,
            ..*self
        })
    }

    /// The same system described by an observer boosted with velocity `u`
    /// relative to the current one.
    pub fn boosted(&self, u: &[f64; 3]) -> Result<Self> {
        self.with_momentum(general_boost(&self.total_momentum, u)?)
    }

    pub fn m1(&self) -> f64 {
        self.m1
    }

    pub fn m2(&self) -> f64 {
        self.m2
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn rest_mass(&self) -> f64 {
        self.rest_mass
    }

    pub fn eta(&self) -> (f64, f64) {
        (self.eta1, self.eta2)
    }

    pub fn total_momentum(&self) -> FourVector {
        self.total_momentum
    }

    pub fn reduced_mass(&self) -> f64 {
        reduced_mass(self.m1, self.m2)
    }

    /// Three-velocity of the system, `P_i / P4`.
    pub fn velocity(&self) -> [f64; 3] {
        let p = self.total_momentum;
        let s = p.spatial();
        [s[0] / p.time(), s[1] / p.time(), s[2] / p.time()]
    }

    /// Unit time-like four-velocity `P / M0`.
    pub fn four_velocity(&self) -> FourVector {
        self.total_momentum * (1.0 / self.rest_mass)
    }
}

/// Centre-of-mass and relative positions: `X = η1 x1 + η2 x2`, `x = x1 − x2`.
pub fn cm_and_relative(
    x1: &FourVector,
    x2: &FourVector,
    sys: &BoundSystem,
) -> (FourVector, FourVector) {
    let (eta1, eta2) = sys.eta();
    (*x1 * eta1 + *x2 * eta2, *x1 - *x2)
}

/// Total and relative momenta: `P = p1 + p2`, `p = η2 p1 − η1 p2`.
pub fn total_and_relative_momentum(
    p1: &FourVector,
    p2: &FourVector,
    sys: &BoundSystem,
) -> (FourVector, FourVector) {
    let (eta1, eta2) = sys.eta();
    (*p1 + *p2, *p1 * eta2 - *p2 * eta1)
}

/// Component of `w` orthogonal to `p`: `w + M0⁻² p (p·w)`.
pub fn perp_projection(w: &FourVector, p: &FourVector, rest_mass: f64) -> Result<FourVector> {
    perp_projection_with_tolerance(w, p, rest_mass, ON_SHELL_TOLERANCE)
}

pub fn perp_projection_with_tolerance(
    w: &FourVector,
    p: &FourVector,
    rest_mass: f64,
    tol: f64,
) -> Result<FourVector> {
    check_on_shell(p, rest_mass, tol)?;
    Ok(*w + *p * (p.dot(w) / (rest_mass * rest_mass)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn dot_signature() {
        let e1 = FourVector::new(1.0, 0.0, 0.0, 0.0);
        let e4 = FourVector::new(0.0, 0.0, 0.0, 1.0);
        assert_eq!(minkowski_dot(&e1, &e1), 1.0);
        assert_eq!(minkowski_dot(&e4, &e4), -1.0);
        assert_eq!(e4.lowered(), [0.0, 0.0, 0.0, -1.0]);
    }

    #[test]
    fn free_pair_at_rest_has_p_squared_minus_four() {
        let sys = BoundSystem::at_rest(1.0, 1.0, 0.0).unwrap();
        assert_eq!(sys.total_momentum().dot(&sys.total_momentum()), -4.0);
    }

    #[test]
    fn identity_boost() {
        let x = FourVector::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(general_boost(&x, &[0.0; 3]).unwrap(), x);
    }

    #[test]
    fn boost_by_point_six() {
        let x = FourVector::new(0.0, 0.0, 0.0, 1.0);
        let y = general_boost(&x, &[0.6, 0.0, 0.0]).unwrap();
        assert_relative_eq!(y.0[0], -0.75, epsilon = 1e-15);
        assert_eq!(y.0[1], 0.0);
        assert_eq!(y.0[2], 0.0);
        assert_relative_eq!(y.0[3], 1.25, epsilon = 1e-15);
    }

    #[test]
    fn superluminal_boost_rejected() {
        let x = FourVector::new(0.0, 0.0, 0.0, 1.0);
        assert!(matches!(
            general_boost(&x, &[1.0, 0.0, 0.0]),
            Err(Error::Domain(_))
        ));
        assert!(general_boost(&x, &[0.8, 0.7, 0.0]).is_err());
        assert!(general_boost(&x, &[1.0 - 1e-13, 0.0, 0.0]).is_err());
        assert!(general_boost(&x, &[f64::NAN, 0.0, 0.0]).is_err());
    }

    #[test]
    fn collinear_round_trip() {
        let x = FourVector::new(0.3, -1.2, 0.7, 2.0);
        let v = [0.3, -0.4, 0.5];
        let back = general_boost(&general_boost(&x, &v).unwrap(), &[-0.3, 0.4, -0.5]).unwrap();
        for i in 0..4 {
            assert_relative_eq!(back.0[i], x.0[i], epsilon = 1e-12);
        }
    }

    #[test]
    fn rest_mass_free_particles() {
        assert_relative_eq!(rest_mass(1.0, 1.0, 0.0, MassBranch::Minus).unwrap(), 2.0, epsilon = 1e-15);
        assert_relative_eq!(rest_mass(2.0, 1.0, 0.0, MassBranch::Minus).unwrap(), 3.0, epsilon = 1e-15);
        // Inner sign as typeset: sqrt(5 + sqrt(34)) ≠ 3.
        let plus = rest_mass(2.0, 1.0, 0.0, MassBranch::Plus).unwrap();
        assert_relative_eq!(plus, (5.0 + 34f64.sqrt()).sqrt(), epsilon = 1e-15);
        assert!((plus - 3.291).abs() < 1e-3);
    }

    #[test]
    fn rest_mass_small_sigma() {
        let m0 = rest_mass(1.0, 1.0, 0.01, MassBranch::Minus).unwrap();
        assert!((m0 - (2.0 + 0.01 / 0.5)).abs() <= 1e-3);
    }

    #[test]
    fn rest_mass_unbound() {
        // σ below −min(m²)/2 drives the inner radicand negative.
        assert!(matches!(
            rest_mass(2.0, 1.0, -0.6, MassBranch::Minus),
            Err(Error::Domain(_))
        ));
        // Both factors negative: inner radicand positive but outer negative.
        assert!(rest_mass(1.0, 1.0, -5.0, MassBranch::Minus).is_err());
        assert!(rest_mass(-1.0, 1.0, 0.0, MassBranch::Minus).is_err());
        assert!(rest_mass(1.0, 1.0, f64::NAN, MassBranch::Minus).is_err());
    }

    #[test]
    fn eta_values() {
        assert_eq!(eta_params(1.0, 1.0, 2.0).unwrap(), (0.5, 0.5));
        let (e1, e2) = eta_params(2.0, 1.0, 3.0).unwrap();
        assert_relative_eq!(e1, 5.0 / 6.0, epsilon = 1e-15);
        assert_relative_eq!(e2, 1.0 / 6.0, epsilon = 1e-15);
        assert_eq!(e1 + e2, 1.0);
        assert!(eta_params(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn cm_relative_examples() {
        let sys = BoundSystem::at_rest(1.0, 1.0, 0.0).unwrap();
        let w = FourVector::new(0.4, -1.0, 2.0, 3.0);
        let (cm, rel) = cm_and_relative(&w, &w, &sys);
        assert_eq!(cm, w);
        assert_eq!(rel, FourVector::ZERO);

        let (cm, rel) = cm_and_relative(&FourVector::unit(0), &FourVector::ZERO, &sys);
        assert_eq!(cm, FourVector::new(0.5, 0.0, 0.0, 0.0));
        assert_eq!(rel, FourVector::unit(0));

        let (p_tot, p_rel) = total_and_relative_momentum(
            &FourVector::new(1.0, 0.0, 0.0, 2.0),
            &FourVector::new(-1.0, 0.0, 0.0, 2.0),
            &sys,
        );
        assert_eq!(p_tot, FourVector::new(0.0, 0.0, 0.0, 4.0));
        assert_eq!(p_rel, FourVector::new(1.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn perp_projection_examples() {
        let p = FourVector::new(0.0, 0.0, 0.0, 3.0);
        let w = FourVector::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(perp_projection(&w, &p, 3.0).unwrap(), FourVector::new(1.0, 2.0, 3.0, 0.0));

        let p = on_shell_momentum(1.7, &[0.2, -0.5, 0.3]).unwrap();
        let zero = perp_projection(&p, &p, 1.7).unwrap();
        assert!(zero.euclidean_norm() < 1e-14);

        assert!(matches!(
            perp_projection(&w, &FourVector::new(0.0, 0.0, 0.0, 2.0), 3.0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn on_shell_examples() {
        assert_eq!(on_shell_momentum(2.0, &[0.0; 3]).unwrap(), FourVector::new(0.0, 0.0, 0.0, 2.0));
        let p = on_shell_momentum(1.0, &[0.6, 0.0, 0.0]).unwrap();
        assert_relative_eq!(p.0[0], 0.75, epsilon = 1e-15);
        assert_relative_eq!(p.0[3], 1.25, epsilon = 1e-15);
        assert!(on_shell_momentum(1.0, &[0.0, 1.0, 0.0]).is_err());
        assert!(on_shell_momentum(0.0, &[0.0; 3]).is_err());
    }

    #[test]
    fn bound_system_invariants() {
        let sys = BoundSystem::new(1.3, 0.7, 0.2, [0.1, 0.5, -0.3]).unwrap();
        let p = sys.total_momentum();
        let m0 = sys.rest_mass();
        assert_relative_eq!(p.dot(&p), -m0 * m0, max_relative = 1e-12);
        assert!(p.time() > 0.0);
        let (e1, e2) = sys.eta();
        assert_eq!(e1 + e2, 1.0);
        let v = sys.velocity();
        assert_relative_eq!(v[1], 0.5, epsilon = 1e-15);

        let off = sys.with_momentum(FourVector::new(0.0, 0.0, 0.0, 2.0 * m0));
        assert!(off.is_err());
        let negative = sys.with_momentum(FourVector::new(0.0, 0.0, 0.0, -m0));
        assert!(negative.is_err());
    }
}
