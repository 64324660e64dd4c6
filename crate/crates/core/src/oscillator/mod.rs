//! The relativistic three-dimensional harmonic oscillator.
//!
//! Stationary states are products of one-dimensional Hermite functions of
//! the constraint coordinates times the centre-of-mass plane wave
//! `exp(i P·X)`. The separation constant is `σ_n = Ω (3/2 + n)` with
//! `n = l1 + l2 + l3`, and the rest mass follows from σ_n through
//! [`rest_mass`](crate::minkowski::rest_mass).
//!
//! Ω is the spring constant and carries units of mass².

pub mod hermite;
pub mod ladder;
pub mod representation;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constraint::{
    alpha_from_a, pi_from_p, xi_from_x, xi_jacobian, Axis, ComplexConstraintVector,
    ConstraintVector,
};
use crate::error::{domain, Result};
use crate::finite_diff::Field4;
use crate::minkowski::{BoundSystem, ComplexFourVector, FourVector, MassBranch};

pub use hermite::{hermite, MAX_QUANTUM_NUMBER};
pub use ladder::{
    explicit_ladder, explicit_ladder_form, four_d_ladder, internal_ladder, ladder_apply, ladder_apply_explicit, ladder_from_four_d,
    number_from_ladders, rest_frame_ladder_coefficients, schrodinger_ladder_coefficients, ExplicitLadderForm, LadderCoefficients,
    LadderDirection, LadderOutcome,
};
pub use representation::{representations, BargmannRepresentation, MomentumRepresentation, PositionRepresentation, Representation};
use hermite::{hermite_function, hermite_function_derivatives, ln_factorial};

fn check_omega(omega: f64) -> Result<()> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(domain(format!("spring constant must be positive, got {omega}")));
    }
    Ok(())
}

fn check_quantum(l: u32) -> Result<()> {
    if l > MAX_QUANTUM_NUMBER {
        return Err(domain(format!(
            "quantum number {l} exceeds the supported maximum {MAX_QUANTUM_NUMBER}"
        )));
    }
    Ok(())
}

/// `σ_n = Ω (3/2 + n)`.
pub fn sigma_n(omega: f64, n: u32) -> Result<f64> {
    check_omega(omega)?;
    Ok(omega * (1.5 + n as f64))
}

/// Spring constant matching a non-relativistic oscillator of angular
/// frequency `omega_nr` and reduced mass `m_r`: `Ω = m_r ω`.
pub fn nr_spring_constant(reduced_mass: f64, omega_nr: f64) -> f64 {
    reduced_mass * omega_nr
}

/// Position-space factor
/// `φ_l(ξ) = (Ω/π)^{1/4} / sqrt(2^l l!) · H_l(√Ω ξ) · exp(−Ω ξ²/2)`.
pub fn phi_1d(l: u32, omega: f64, xi: f64) -> Result<f64> {
    check_omega(omega)?;
    check_quantum(l)?;
    Ok(phi_unchecked(l, omega, xi))
}

/// Momentum-space factor
/// `φ_l(π) = (1/(Ωπ))^{1/4} / sqrt(2^l l!) · H_l(π/√Ω) · exp(−π²/(2Ω))`.
pub fn phi_1d_momentum(l: u32, omega: f64, pi: f64) -> Result<f64> {
    check_omega(omega)?;
    check_quantum(l)?;
    Ok(phi_momentum_unchecked(l, omega, pi))
}

fn phi_unchecked(l: u32, omega: f64, xi: f64) -> f64 {
    omega.powf(0.25) * hermite_function(l, omega.sqrt() * xi)
}

fn phi_momentum_unchecked(l: u32, omega: f64, pi: f64) -> f64 {
    omega.powf(-0.25) * hermite_function(l, pi / omega.sqrt())
}

/// `(φ_l, dφ_l/dξ, d²φ_l/dξ²)` from the Hermite-function ladder relations.
pub fn phi_1d_derivatives(l: u32, omega: f64, xi: f64) -> Result<(f64, f64, f64)> {
    check_omega(omega)?;
    check_quantum(l)?;
    let (h, dh, ddh) = hermite_function_derivatives(l, omega.sqrt() * xi);
    let amp = omega.powf(0.25);
    Ok((amp * h, amp * omega.sqrt() * dh, amp * omega * ddh))
}

/// Oscillator quantum numbers `(l1, l2, l3)`, each in `0..=MAX_QUANTUM_NUMBER`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuantumNumbers([u32; 3]);

impl QuantumNumbers {
    pub const GROUND: QuantumNumbers = QuantumNumbers([0; 3]);

    pub fn new(l1: u32, l2: u32, l3: u32) -> Result<Self> {
        for l in [l1, l2, l3] {
            check_quantum(l)?;
        }
        Ok(QuantumNumbers([l1, l2, l3]))
    }

    /// Builds from signed integers, rejecting negative entries.
    pub fn from_signed(l: [i64; 3]) -> Result<Self> {
        let mut out = [0u32; 3];
        for (slot, &v) in out.iter_mut().zip(&l) {
            if v < 0 {
                return Err(domain(format!("quantum numbers must be non-negative, got {v}")));
            }
            *slot = u32::try_from(v).map_err(|_| domain(format!("quantum number {v} is too large")))?;
        }
        Self::new(out[0], out[1], out[2])
    }

    pub fn as_array(&self) -> [u32; 3] {
        self.0
    }

    pub fn get(&self, axis: Axis) -> u32 {
        self.0[axis.index()]
    }

    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Copy with the quantum number on `axis` replaced.
    pub fn with(&self, axis: Axis, l: u32) -> Result<Self> {
        let mut q = self.0;
        q[axis.index()] = l;
        Self::new(q[0], q[1], q[2])
    }

    /// All triples with `l1 + l2 + l3 = n`, lexicographically ordered.
    pub fn level(n: u32) -> Vec<QuantumNumbers> {
        let mut out = Vec::new();
        for l1 in (0..=n).rev() {
            for l2 in (0..=n - l1).rev() {
                out.push(QuantumNumbers([l1, l2, n - l1 - l2]));
            }
        }
        out
    }

    /// All triples with `n ≤ max_n`, grouped by level.
    pub fn up_to(max_n: u32) -> Vec<QuantumNumbers> {
        (0..=max_n).flat_map(QuantumNumbers::level).collect()
    }
}

/// Degeneracy of level `n`: `(n+1)(n+2)/2`.
pub fn level_degeneracy(n: u32) -> u64 {
    let n = n as u64;
    (n + 1) * (n + 2) / 2
}

/// An oscillator eigenstate attached to its bound system.
///
/// The system's separation constant always equals `σ_n` for the state's level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorState {
    quanta: QuantumNumbers,
    omega: f64,
    system: BoundSystem,
}

impl OscillatorState {
    /// State of two masses bound with spring constant `omega`, moving with velocity `v`.
    pub fn new(quanta: QuantumNumbers, omega: f64, m1: f64, m2: f64, v: [f64; 3]) -> Result<Self> {
        let sigma = sigma_n(omega, quanta.n())?;
        let system = BoundSystem::with_branch(m1, m2, sigma, MassBranch::Minus, v)?;
        Ok(OscillatorState {
            quanta,
            omega,
            system,
        })
    }

    /// Same state seen by an observer boosted with velocity `u`.
    pub fn in_frame(&self, u: &[f64; 3]) -> Result<Self> {
        Ok(OscillatorState {
            system: self.system.boosted(u)?,
            ..*self
        })
    }

    /// Same system with new quantum numbers.
    pub fn with_quanta(&self, quanta: QuantumNumbers) -> Result<Self> {
        Self::new(
            quanta,
            self.omega,
            self.system.m1(),
            self.system.m2(),
            self.system.velocity(),
        )
    }

    pub fn quanta(&self) -> QuantumNumbers {
        self.quanta
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn system(&self) -> &BoundSystem {
        &self.system
    }

    pub fn sigma(&self) -> f64 {
        self.system.sigma()
    }

    pub fn n(&self) -> u32 {
        self.quanta.n()
    }

    /// `exp(i P·X)`.
    pub fn phase(&self, cm: &FourVector) -> Complex64 {
        Complex64::from_polar(1.0, self.system.total_momentum().dot(cm))
    }

    /// `φ_l1(ξ1) φ_l2(ξ2) φ_l3(ξ3)`.
    pub fn internal_position(&self, xi: &ConstraintVector) -> f64 {
        let l = self.quanta.0;
        (0..3).map(|i| phi_unchecked(l[i], self.omega, xi.0[i])).product()
    }

    /// `φ_l1(π1) φ_l2(π2) φ_l3(π3)` in the momentum representation.
    pub fn internal_momentum(&self, pi: &ConstraintVector) -> f64 {
        let l = self.quanta.0;
        (0..3).map(|i| phi_momentum_unchecked(l[i], self.omega, pi.0[i])).product()
    }

    /// `α1^l1 α2^l2 α3^l3 / sqrt(l1! l2! l3!)`.
    pub fn internal_bargmann(&self, alpha: &ComplexConstraintVector) -> Complex64 {
        let l = self.quanta.0;
        let norm = (-0.5 * l.iter().map(|&k| ln_factorial(k)).sum::<f64>()).exp();
        (0..3).map(|i| alpha.0[i].powu(l[i])).product::<Complex64>() * norm
    }

    /// `∂φ/∂ξ_i` and `∂²φ/∂ξ_i∂ξ_j` of the internal position function.
    pub fn internal_derivatives(&self, xi: &ConstraintVector) -> (f64, [f64; 3], [[f64; 3]; 3]) {
        let l = self.quanta.0;
        let parts: Vec<(f64, f64, f64)> = (0..3)
            .map(|i| phi_1d_derivatives(l[i], self.omega, xi.0[i]).expect("validated state"))
            .collect();
        let value = parts[0].0 * parts[1].0 * parts[2].0;
        let others = |i: usize| -> f64 {
            (0..3).filter(|&k| k != i).map(|k| parts[k].0).product()
        };
        let grad = std::array::from_fn(|i| parts[i].1 * others(i));
        let hess = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if i == j {
                    parts[i].2 * others(i)
                } else {
                    let k = 3 - i - j;
                    parts[i].1 * parts[j].1 * parts[k].0
                }
            })
        });
        (value, grad, hess)
    }
}

/// ψ at relative position `x` and CM position `cm`, through ξ(x).
pub fn psi_position(state: &OscillatorState, x: &FourVector, cm: &FourVector) -> Complex64 {
    state.phase(cm) * state.internal_position(&xi_from_x(x, state.system()))
}

/// ψ at relative momentum `p` and CM position `cm`, through π(p).
pub fn psi_momentum(state: &OscillatorState, p: &FourVector, cm: &FourVector) -> Complex64 {
    state.phase(cm) * state.internal_momentum(&pi_from_p(p, state.system()))
}

/// ψ at Bargmann point `a` and CM position `cm`, through α(a).
pub fn psi_bargmann(state: &OscillatorState, a: &ComplexFourVector, cm: &FourVector) -> Complex64 {
    state.phase(cm) * state.internal_bargmann(&alpha_from_a(a, state.system()))
}

/// The internal factor `x ↦ φ(ξ(x))` as a four-space field with a
/// closed-form gradient. Ladder operators act on this factor; the CM plane
/// wave rides along unchanged.
#[derive(Debug, Clone, Copy)]
pub struct InternalField<'a>(pub &'a OscillatorState);

impl Field4 for InternalField<'_> {
    fn value(&self, x: &FourVector) -> Complex64 {
        Complex64::new(self.0.internal_position(&xi_from_x(x, self.0.system())), 0.0)
    }

    fn analytic_gradient(&self, x: &FourVector) -> Option<ComplexFourVector> {
        let sys = self.0.system();
        let (_, grad_xi, _) = self.0.internal_derivatives(&xi_from_x(x, sys));
        let jac = xi_jacobian(sys);
        Some(ComplexFourVector(std::array::from_fn(|mu| {
            Complex64::new((0..3).map(|i| grad_xi[i] * jac[i][mu]).sum(), 0.0)
        })))
    }
}

/// One row of the spectrum table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub n: u32,
    pub degeneracy: u64,
    pub sigma: f64,
    pub rest_mass: f64,
}

/// Levels `0..=max_n` with degeneracy, σ_n and the bound rest mass.
pub fn spectrum(omega: f64, m1: f64, m2: f64, max_n: u32, branch: MassBranch) -> Result<Vec<SpectrumRow>> {
    (0..=max_n)
        .map(|n| {
            let sigma = sigma_n(omega, n)?;
            Ok(SpectrumRow {
                n,
                degeneracy: level_degeneracy(n),
                sigma,
                rest_mass: crate::minkowski::rest_mass(m1, m2, sigma, branch)?,
            })
        })
        .collect()
}
