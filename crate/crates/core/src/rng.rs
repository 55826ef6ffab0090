//! Seeded randomness.
//!
//! Every random choice in the crate flows from a single 64-bit seed through
//! SplitMix64. Trial `i` of a run seeded with `s` draws from its own stream
//! seeded by [`trial_seed`], so results do not depend on scheduling.

use rand::SeedableRng;
pub use rand_xoshiro::SplitMix64;

pub type Rng = SplitMix64;

pub fn seeded(seed: u64) -> Rng {
    SplitMix64::seed_from_u64(seed)
}

/// SplitMix64 finalizer.
pub fn mix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed of trial `index` in a run seeded with `seed`.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    mix64(seed ^ mix64(index))
}
