//! Fixed inputs shared by the benchmarks.

use upsilon_core::braid::{kn_braid, BraidWord};
use upsilon_core::LaurentPoly;

/// `Δ_{K_n}` for `n = 1..=count`.
pub fn family_polys(count: i64) -> Vec<LaurentPoly> {
    (1..=count).map(|n| upsilon_core::family::kn_alexander_closed(n).expect("n >= 1")).collect()
}

pub fn family_braids(count: i64) -> Vec<BraidWord> {
    (1..=count).map(|n| kn_braid(n).expect("n >= 1")).collect()
}
