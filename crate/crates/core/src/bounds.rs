//! Search-bound policy for the exponent searches.
//!
//! In `Z/n` a nilpotency or radical-membership exponent never needs to exceed
//! the bit length of `n` (prime multiplicities in `n` are bounded by `log2 n`),
//! and likewise over `Z` relative to the bit length of the ideal's gcd. The
//! environment variable `ZARISKI_EXPONENT_CAP` overrides the computed bound,
//! which is only ever useful to raise it for experiments.

use num_bigint::BigUint;
use std::sync::OnceLock;

pub const EXPONENT_CAP_VAR: &str = "ZARISKI_EXPONENT_CAP";

fn env_cap() -> Option<u32> {
    static CAP: OnceLock<Option<u32>> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(EXPONENT_CAP_VAR)
            .ok()
            .and_then(|v| v.parse().ok())
    })
}

/// Exponent bound for searches modulo `n` (or relative to a gcd over `Z`).
pub fn exponent_bound(n: &BigUint) -> u32 {
    let computed = n.bits().max(1) as u32;
    match env_cap() {
        Some(cap) => cap.max(computed),
        None => computed,
    }
}
