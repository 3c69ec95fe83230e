//! Seeded randomness helpers shared by the generators.
//!
//! Everything random in this crate flows through `ChaCha8Rng::seed_from_u64`
//! plus the two helpers below, so results are reproducible across platforms
//! and releases as long as the draw order is unchanged.

use rand_core::RngCore;

/// Uniform integer in `[0, bound)` via Lemire's multiply-shift with rejection.
/// Unbiased; consumes one 64-bit draw per accepted sample.
pub(crate) fn bounded(rng: &mut impl RngCore, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    loop {
        let x = rng.next_u64();
        let wide = (x as u128) * (bound as u128);
        let lo = wide as u64;
        if lo < bound {
            let threshold = bound.wrapping_neg() % bound;
            if lo < threshold {
                continue;
            }
        }
        return (wide >> 64) as u64;
    }
}

/// SplitMix64 finalizer. Used as a stateless per-(seed, round, item) hash
/// where a full generator would be overkill.
pub(crate) fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}
