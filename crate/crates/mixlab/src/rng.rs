//! Seeded randomness.
//!
//! Every random choice in the crate goes through [`seeded`], which is
//! ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`). Independent streams
//! for trials are obtained with [`derive_seed`], a SplitMix64 step applied to
//! `seed + index * 0x9E3779B97F4A7C15`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for the `index`-th independent sub-stream of `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
