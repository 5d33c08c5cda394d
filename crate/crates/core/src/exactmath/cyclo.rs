//! The ring `Z[ζ]` for a primitive sixth root of unity `ζ = e^{2πi/6}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::LaurentPoly;

/// `a + bζ` with `ζ² = ζ - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CycloZ6 {
    pub a: BigInt,
    pub b: BigInt,
}

impl CycloZ6 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        CycloZ6 { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn zeta() -> Self {
        Self::new(0, 1)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(6) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 1),
            3 => Self::new(-1, 0),
            4 => Self::new(0, -1),
            _ => Self::new(1, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Complex embedding `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        (a + 0.5 * b, b * 3f64.sqrt() / 2.0)
    }

    /// Evaluates `p` at `ζ`, reducing exponents mod 6.
    pub fn eval(p: &LaurentPoly) -> Self {
        let mut acc = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (c, e) in p.terms() {
            acc[e.rem_euclid(6) as usize] += c;
        }
        acc.iter().enumerate().fold(Self::zero(), |s, (k, c)| {
            let z = Self::zeta_pow(k as i64);
            s + Self::new(&z.a * c, &z.b * c)
        })
    }
}

impl Add for CycloZ6 {
    type Output = CycloZ6;
    fn add(self, r: CycloZ6) -> CycloZ6 {
        CycloZ6 { a: self.a + r.a, b: self.b + r.b }
    }
}

impl Sub for CycloZ6 {
    type Output = CycloZ6;
    fn sub(self, r: CycloZ6) -> CycloZ6 {
        CycloZ6 { a: self.a - r.a, b: self.b - r.b }
    }
}

impl Neg for CycloZ6 {
    type Output = CycloZ6;
    fn neg(self) -> CycloZ6 {
        CycloZ6 { a: -self.a, b: -self.b }
    }
}

impl Mul for CycloZ6 {
    type Output = CycloZ6;
    // (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bd(ζ - 1)
    fn mul(self, r: CycloZ6) -> CycloZ6 {
        let bd = &self.b * &r.b;
        CycloZ6 { a: &self.a * &r.a - &bd, b: &self.a * &r.b + &self.b * &r.a + bd }
    }
}

impl fmt::Display for CycloZ6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}ζ", self.a, sign, self.b.abs())
    }
}

impl Serialize for CycloZ6 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("CycloZ6", 2)?;
        st.serialize_field("a", &self.a.to_string())?;
        st.serialize_field("b", &self.b.to_string())?;
        st.end()
    }
}
