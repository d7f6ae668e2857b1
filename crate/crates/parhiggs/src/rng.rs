//! Deterministic pseudorandom sampling for verification subcommands.
//!
//! A 64-bit linear congruential generator with the MMIX constants
//! multiplier 6364136223846793005 and increment 1442695040888963407,
//! truncated to the high 32 bits per draw. The constants are part of the
//! output contract: golden files produced with a given seed are portable.

use crate::exact_algebra::{rat, Gaussian, Rat};

pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(LCG_MULTIPLIER)
            .wrapping_add(LCG_INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform draw from 0..n (n > 0).
    pub fn below(&mut self, n: u32) -> u32 {
        assert!(n > 0);
        self.next_u32() % n
    }

    /// Signed integer in [-bound, bound].
    pub fn int(&mut self, bound: u32) -> i64 {
        self.below(2 * bound + 1) as i64 - bound as i64
    }

    /// Rational k/d with 0 < k < d/2 (weights live in the open interval
    /// (0, 1/2)); d must be at least 5.
    pub fn weight(&mut self, d: u32) -> Rat {
        assert!(d >= 5);
        let k = 1 + self.below(d / 2 + d % 2 - 1);
        rat(k as i64, d as i64)
    }

    /// Rational with numerator in [-bound, bound] and denominator in 1..=dmax.
    pub fn rational(&mut self, bound: u32, dmax: u32) -> Rat {
        rat(self.int(bound), 1 + self.below(dmax) as i64)
    }

    /// Gaussian rational with small numerators and denominators.
    pub fn gaussian(&mut self, bound: u32, dmax: u32) -> Gaussian {
        Gaussian::new(self.rational(bound, dmax), self.rational(bound, dmax))
    }

    /// Nonzero Gaussian rational.
    pub fn nonzero_gaussian(&mut self, bound: u32, dmax: u32) -> Gaussian {
        loop {
            let g = self.gaussian(bound, dmax);
            if !g.is_zero() {
                return g;
            }
        }
    }
}
