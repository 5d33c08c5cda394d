//! Concordance invariants of L-space knots computed exactly.
//!
//! From an Alexander polynomial (parsed, read off a braid closure, produced
//! from torus-knot parameters, or from the `K_n` surgery family) this crate
//! computes the formal semigroup, the Upsilon function via the gap staircase
//! and its Legendre–Fenchel transform, `-3∫Υ`, and `ω = -3∫Υ - 2τ`. The
//! algebraic-knot side works from multiplicity sequences.

pub mod algebraic;
pub mod braid;
pub mod census;
mod error;
pub mod exactmath;
pub mod family;
pub mod signature;
pub mod upsilon;

pub use error::{Error, Result};
pub use exactmath::{CycloZ6, LaurentPoly, PlFunction, Rational, TriLaurentPoly};
pub use upsilon::{report, FormalSemigroup, InvariantReport};
