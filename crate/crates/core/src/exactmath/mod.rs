//! Exact arithmetic: rationals, Laurent polynomials in one and three
//! variables, the ring `Z[ζ₆]`, and piecewise-linear functions on `[0, 2]`.
//!
//! Nothing in here touches floating point except explicit conversions for
//! display and for cross-checks against numeric code.

mod cyclo;
mod laurent;
mod pl;
mod tri;

pub use cyclo::CycloZ6;
pub(crate) use laurent::coeffs_from_json;
pub use laurent::LaurentPoly;
pub use pl::PlFunction;
pub use tri::{Exponent3, TriLaurentPoly};

use num_bigint::BigInt;

/// Reduced fraction of arbitrary-precision integers with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn laurent_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a * b
}

pub fn laurent_divexact(a: &LaurentPoly, b: &LaurentPoly) -> crate::Result<LaurentPoly> {
    a.div_exact(b)
}

pub fn tri_substitute(p: &TriLaurentPoly, ex: i64, ey: i64, ez: i64) -> LaurentPoly {
    p.substitute(ex, ey, ez)
}

pub fn pl_integrate(f: &PlFunction) -> Rational {
    f.integrate()
}

pub fn cyclo_eval(p: &LaurentPoly) -> CycloZ6 {
    CycloZ6::eval(p)
}
