//! Seedable, splittable random source.
//!
//! The generator is ChaCha8 keyed by four SplitMix64 outputs of the seed.
//! Child streams for round `r` are generators reseeded with
//! `mix(seed, r)`, so per-round randomness does not depend on evaluation
//! order. Uniform reals take the top 53 bits of a `u64` draw.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Identifies the exact algorithm; embedded in every randomized output.
pub const GENERATOR_ID: &str = "chacha8-splitmix64-v1";

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN_GAMMA);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of the child stream for `(seed, index)`.
pub(crate) fn mix(seed: u64, index: u64) -> u64 {
    let mut s = seed ^ index.wrapping_mul(GOLDEN_GAMMA).rotate_left(17);
    let first = splitmix64(&mut s);
    first ^ splitmix64(&mut s)
}

#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> RandomSource {
        let mut s = seed;
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut s).to_le_bytes());
        }
        RandomSource {
            seed,
            rng: ChaCha8Rng::from_seed(key),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent stream for `index`, derived from the seed only.
    pub fn child(&self, index: u64) -> RandomSource {
        RandomSource::new(mix(self.seed, index))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn bit(&mut self) -> u8 {
        (self.next_u64() >> 63) as u8
    }

    /// Uniform integer in `0..n`; `n` must be a power of two up to 2^32.
    pub fn below_pow2(&mut self, n: u64) -> u64 {
        debug_assert!(n.is_power_of_two() && n <= 1 << 32);
        if n == 1 {
            return 0;
        }
        self.next_u64() >> (64 - n.trailing_zeros())
    }
}
