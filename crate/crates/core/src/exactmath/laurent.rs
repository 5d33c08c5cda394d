//! Integer Laurent polynomials in one variable `t`.
//!
//! Coefficients are stored densely from `min_degree` upward. The
//! representation is canonical: the first and last stored coefficients are
//! nonzero, and the zero polynomial has no coefficients and `min_degree` 0.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_degree += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_degree = 0;
        }
        self
    }

    pub fn zero() -> Self {
        LaurentPoly { min_degree: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        LaurentPoly { min_degree: e, coeffs: vec![c.into()] }.trim()
    }

    /// Builds `sum coeffs[i] * t^(min_degree + i)`.
    pub fn from_coeffs<C: Into<BigInt>>(min_degree: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        LaurentPoly { min_degree, coeffs: coeffs.into_iter().map(Into::into).collect() }.trim()
    }

    /// Collects `(coefficient, exponent)` pairs, adding like terms.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, i64)>) -> Self {
        let terms: Vec<(BigInt, i64)> = terms.into_iter().map(|(c, e)| (c.into(), e)).collect();
        let Some(lo) = terms.iter().map(|t| t.1).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.1).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (c, e) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        LaurentPoly { min_degree: lo, coeffs }.trim()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Highest exponent with a nonzero coefficient; `min_degree - 1` for zero.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.coeffs.len() as i64 - 1
    }

    /// Width of the exponent range, `max_degree - min_degree`.
    pub fn span(&self) -> i64 {
        self.max_degree() - self.min_degree
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.min_degree;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(coefficient, exponent)`, ascending in exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, i64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (c, self.min_degree + i as i64))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_degree: self.min_degree + k, coeffs: self.coeffs.clone() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Reflection `p(t^{-1})`.
    pub fn reflect(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_degree: -self.max_degree(), coeffs: self.coeffs.iter().rev().cloned().collect() }
    }

    /// Coefficient sequence is a palindrome, i.e. `p(t) = t^k p(t^{-1})`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / divisor`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (n, d) = (self.coeffs.len(), divisor.coeffs.len());
        if n < d {
            return Err(Error::InexactDivision);
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(LaurentPoly { min_degree: self.min_degree - divisor.min_degree, coeffs: quot }.trim())
    }

    /// Fixes the unit ambiguity `±t^k` of an Alexander polynomial: the lowest
    /// term moves to degree 0 and the sign is chosen so that the value at
    /// `t = 1` is `+1`.
    pub fn normalize_alexander(&self) -> Result<LaurentPoly> {
        let shifted = self.shift(-self.min_degree);
        let v = shifted.eval_at_one();
        if v.is_one() {
            Ok(shifted)
        } else if (-&v).is_one() {
            Ok(-shifted)
        } else {
            Err(Error::NormalizationFailure { value: v.to_string() })
        }
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_degree.min(rhs.min_degree);
        let hi = self.max_degree().max(rhs.max_degree());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + rhs.coeff(e));
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { min_degree: self.min_degree, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.min_degree + rhs.min_degree, coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

/// Renders descending in degree, e.g. `t^2 - t + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (k, (c, e)) in terms.into_iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses text such as `t^18 - t^17 + 1`, `2t^-3 + 5*t`, `-t^{4} − 1`.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String =
            s.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '\u{2212}' { '-' } else { c }).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = cleaned.as_bytes();
        let mut pos = 0;
        let mut terms = Vec::new();
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            let mut saw_sign = false;
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                saw_sign = true;
                pos += 1;
            }
            if !saw_sign && !terms.is_empty() {
                return Err(Error::Parse(format!("expected '+' or '-' at offset {pos} in {s:?}")));
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let coef = if pos > start { cleaned[start..pos].parse::<BigInt>().unwrap() } else { BigInt::one() };
            let had_digits = pos > start;
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
            }
            let mut exp = 0i64;
            if pos < bytes.len() && bytes[pos] == b't' {
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let braced = pos < bytes.len() && (bytes[pos] == b'{' || bytes[pos] == b'(');
                    if braced {
                        pos += 1;
                    }
                    let es = pos;
                    if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                        pos += 1;
                    }
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    exp = cleaned[es..pos]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent at offset {es} in {s:?}")))?;
                    if braced {
                        if pos < bytes.len() && (bytes[pos] == b'}' || bytes[pos] == b')') {
                            pos += 1;
                        } else {
                            return Err(Error::Parse(format!("unclosed exponent in {s:?}")));
                        }
                    }
                }
            } else if !had_digits {
                return Err(Error::Parse(format!("expected a term at offset {pos} in {s:?}")));
            }
            terms.push((sign * coef, exp));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

fn coeff_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self.coeffs.iter().map(coeff_to_json).collect();
        let mut st = serializer.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("minDegree", &self.min_degree)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawLaurent {
    #[serde(rename = "minDegree", default)]
    min_degree: i64,
    coeffs: Vec<serde_json::Value>,
}

/// Accepts coefficients as JSON integers or decimal strings.
pub(crate) fn coeffs_from_json(values: &[serde_json::Value]) -> std::result::Result<Vec<BigInt>, String> {
    values
        .iter()
        .map(|v| match v {
            serde_json::Value::Number(n) => {
                n.as_i64().map(BigInt::from).ok_or_else(|| format!("non-integer coefficient {n}"))
            }
            serde_json::Value::String(s) => s.parse::<BigInt>().map_err(|e| format!("coefficient {s:?}: {e}")),
            other => Err(format!("unexpected coefficient {other}")),
        })
        .collect()
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawLaurent::deserialize(deserializer)?;
        let coeffs = coeffs_from_json(&raw.coeffs).map_err(de::Error::custom)?;
        Ok(LaurentPoly::from_coeffs(raw.min_degree, coeffs))
    }
}
