//! Exact continuous piecewise-linear functions on `[0, 2]`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{rat, Rational};
use crate::error::{Error, Result};

/// A continuous function on `[0, 2]` given by its values at breakpoints,
/// linear in between.
///
/// Stored in normal form: interior breakpoints where the slope does not
/// change are dropped, so structural equality is equality of functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlFunction {
    xs: Vec<Rational>,
    ys: Vec<Rational>,
}

impl PlFunction {
    pub fn domain_end() -> Rational {
        rat(2, 1)
    }

    /// Builds a function from `(t, value)` pairs. The abscissae must be
    /// strictly increasing, start at 0 and end at 2.
    pub fn new(points: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self> {
        let (xs, ys): (Vec<_>, Vec<_>) = points.into_iter().unzip();
        if xs.len() < 2 {
            return Err(Error::InvalidParameter("a PL function needs at least two breakpoints".into()));
        }
        if !xs[0].is_zero() || xs[xs.len() - 1] != Self::domain_end() {
            return Err(Error::InvalidParameter("breakpoints must span [0, 2]".into()));
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter("breakpoints must be strictly increasing".into()));
        }
        Ok(PlFunction { xs, ys }.normalized())
    }

    pub fn zero() -> Self {
        PlFunction { xs: vec![Rational::zero(), Self::domain_end()], ys: vec![Rational::zero(), Rational::zero()] }
    }

    /// Builds `f` from affine pieces `slope * t + intercept` on consecutive
    /// intervals `[breaks[i], breaks[i+1]]`. Continuity is checked.
    pub fn from_pieces(breaks: &[Rational], pieces: &[(Rational, Rational)]) -> Result<Self> {
        if breaks.len() != pieces.len() + 1 {
            return Err(Error::InvalidParameter("need one affine piece per interval".into()));
        }
        let mut points = Vec::with_capacity(breaks.len());
        for (i, x) in breaks.iter().enumerate() {
            let right = pieces.get(i).map(|(m, c)| m * x + c);
            let left = i.checked_sub(1).map(|j| &pieces[j].0 * x + &pieces[j].1);
            let y = match (left, right) {
                (Some(l), Some(r)) if l != r => {
                    return Err(Error::InvalidParameter(format!("discontinuity at t = {x}")));
                }
                (_, Some(v)) | (Some(v), None) => v,
                (None, None) => unreachable!(),
            };
            points.push((x.clone(), y));
        }
        Self::new(points)
    }

    fn normalized(mut self) -> Self {
        let mut i = 1;
        while i + 1 < self.xs.len() {
            let s0 = (&self.ys[i] - &self.ys[i - 1]) / (&self.xs[i] - &self.xs[i - 1]);
            let s1 = (&self.ys[i + 1] - &self.ys[i]) / (&self.xs[i + 1] - &self.xs[i]);
            if s0 == s1 {
                self.xs.remove(i);
                self.ys.remove(i);
            } else {
                i += 1;
            }
        }
        self
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.xs
    }

    pub fn values(&self) -> &[Rational] {
        &self.ys
    }

    pub fn points(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.xs.iter().zip(&self.ys)
    }

    /// Slope on each segment, left to right.
    pub fn slopes(&self) -> Vec<Rational> {
        self.xs.windows(2).zip(self.ys.windows(2)).map(|(x, y)| (&y[1] - &y[0]) / (&x[1] - &x[0])).collect()
    }

    pub fn is_convex(&self) -> bool {
        self.slopes().windows(2).all(|s| s[0] <= s[1])
    }

    /// Value at `t`; `None` outside `[0, 2]`.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        if t < &self.xs[0] || t > &self.xs[self.xs.len() - 1] {
            return None;
        }
        let k = self.xs.partition_point(|x| x <= t);
        if k == self.xs.len() {
            return Some(self.ys[k - 1].clone());
        }
        let (x0, x1) = (&self.xs[k - 1], &self.xs[k]);
        let (y0, y1) = (&self.ys[k - 1], &self.ys[k]);
        Some(y0 + (y1 - y0) * (t - x0) / (x1 - x0))
    }

    /// Exact integral over `[0, 2]` by the trapezoid rule on each segment.
    pub fn integrate(&self) -> Rational {
        let half = rat(1, 2);
        self.xs
            .windows(2)
            .zip(self.ys.windows(2))
            .map(|(x, y)| (&x[1] - &x[0]) * (&y[0] + &y[1]) * &half)
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `t -> f(2 - t)`.
    pub fn reflect(&self) -> Self {
        let two = Self::domain_end();
        PlFunction { xs: self.xs.iter().rev().map(|x| &two - x).collect(), ys: self.ys.iter().rev().cloned().collect() }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        PlFunction { xs: self.xs.clone(), ys: self.ys.iter().map(|y| y * k).collect() }
    }

    fn combine(&self, other: &PlFunction, op: impl Fn(Rational, Rational) -> Rational) -> PlFunction {
        let mut xs: Vec<Rational> = self.xs.iter().chain(&other.xs).cloned().collect();
        xs.sort();
        xs.dedup();
        let ys = xs.iter().map(|x| op(self.eval(x).unwrap(), other.eval(x).unwrap())).collect();
        PlFunction { xs, ys }.normalized()
    }
}

impl Add for &PlFunction {
    type Output = PlFunction;
    fn add(self, rhs: &PlFunction) -> PlFunction {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &PlFunction {
    type Output = PlFunction;
    fn sub(self, rhs: &PlFunction) -> PlFunction {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Neg for &PlFunction {
    type Output = PlFunction;
    fn neg(self) -> PlFunction {
        self.scale(&-Rational::one())
    }
}

impl std::iter::Sum for PlFunction {
    fn sum<I: Iterator<Item = PlFunction>>(iter: I) -> Self {
        iter.fold(PlFunction::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for PlFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points().map(|(x, y)| format!("({x}, {y})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Serialized as `[["t", "v"], ...]` with exact fraction strings.
impl Serialize for PlFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pts: Vec<[String; 2]> = self.points().map(|(x, y)| [x.to_string(), y.to_string()]).collect();
        pts.serialize(serializer)
    }
}
