//! Seeded sampling of small random rationals for the positive side of searches.

use alloc::vec::Vec;

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::Rational;

const NUMERATOR_BOUND: u64 = 30;
const DENOMINATOR_BOUND: u64 = 7;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn below(&mut self, n: u64) -> u64 {
        // n is tiny, so the modulo bias is irrelevant for sampling generic points
        self.rng.next_u64() % n
    }

    /// A rational `p/q` with `|p| ≤ 30` and `1 ≤ q ≤ 7`.
    pub fn rational(&mut self) -> Rational {
        let p = self.below(2 * NUMERATOR_BOUND + 1) as i64 - NUMERATOR_BOUND as i64;
        let q = self.below(DENOMINATOR_BOUND) as i64 + 1;
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }
}

/// Budget and policy shared by every randomized-positive, certified-negative search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub trials: usize,
    pub seed: u64,
    /// Largest pencil size for which the determinant is expanded symbolically.
    pub symbolic_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { trials: 8, seed: 0x5eed, symbolic_cap: 6 }
    }
}
