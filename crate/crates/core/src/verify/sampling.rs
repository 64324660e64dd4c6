//! Seeded random cases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, UnitSphere};

use crate::constraint::{embed, ConstraintVector};
use crate::error::Result;
use crate::minkowski::{BoundSystem, FourVector};

pub const MASS_RANGE: (f64, f64) = (0.5, 3.0);
pub const COMPONENT_RANGE: (f64, f64) = (-2.0, 2.0);
/// σ is drawn from `[0, SIGMA_FRACTION · m1 m2]`.
pub const SIGMA_FRACTION: f64 = 0.5;

/// Seeded generator of random inputs for the suites.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    /// Generator for `seed`; `stream` separates suites sharing a seed.
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        if lo == hi {
            lo
        } else {
            self.rng.gen_range(lo..=hi)
        }
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn masses(&mut self) -> (f64, f64) {
        (self.uniform(MASS_RANGE.0, MASS_RANGE.1), self.uniform(MASS_RANGE.0, MASS_RANGE.1))
    }

    pub fn sigma(&mut self, m1: f64, m2: f64) -> f64 {
        self.uniform(0.0, SIGMA_FRACTION * m1 * m2)
    }

    pub fn component(&mut self) -> f64 {
        self.uniform(COMPONENT_RANGE.0, COMPONENT_RANGE.1)
    }

    pub fn four_vector(&mut self) -> FourVector {
        FourVector(std::array::from_fn(|_| self.component()))
    }

    pub fn direction(&mut self) -> [f64; 3] {
        UnitSphere.sample(&mut self.rng)
    }

    /// Uniform direction, magnitude uniform in `[0, vmax]`.
    pub fn velocity(&mut self, vmax: f64) -> [f64; 3] {
        let speed = self.uniform(0.0, vmax);
        self.direction().map(|d| d * speed)
    }

    /// Uniform direction with magnitude exactly `speed`.
    pub fn velocity_with_speed(&mut self, speed: f64) -> [f64; 3] {
        self.direction().map(|d| d * speed)
    }

    /// Random masses and σ, moving with a random velocity of magnitude ≤ `vmax`.
    pub fn system(&mut self, vmax: f64) -> Result<BoundSystem> {
        let (m1, m2) = self.masses();
        let sigma = self.sigma(m1, m2);
        let v = self.velocity(vmax);
        BoundSystem::new(m1, m2, sigma, v)
    }

    /// Constraint point with components in `[−r, r]`.
    pub fn xi(&mut self, r: f64) -> ConstraintVector {
        ConstraintVector(std::array::from_fn(|_| self.uniform(-r, r)))
    }

    /// Four-space point whose constraint image is `xi`, displaced along the
    /// four-velocity by a random amount in `[−2, 2]`.
    pub fn point_over(&mut self, xi: &ConstraintVector, sys: &BoundSystem) -> FourVector {
        let s = self.component();
        embed(xi, sys) + sys.four_velocity() * s
    }
}
