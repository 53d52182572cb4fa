//! Inputs shared by the benchmark harnesses.

use num_bigint::BigUint;

/// Bases whose speed profiles are timed: a few small ones, the 807 example,
/// and a base whose stabilization offset is large.
pub const PROFILE_BASES: [u32; 5] = [2, 3, 7, 807, 255];

/// `10^k` as an exact height.
pub fn power_of_ten(k: u32) -> BigUint {
    BigUint::from(10u32).pow(k)
}
