//! Roots of `Δ_{K_n}` on the unit circle near `t = 1`.
//!
//! With `ψ_n = t^{-n-8} Δ_{K_n}` and `t = e^{iu}`, the real function
//! `γ_n(u) = ψ_n(e^{iu}) / 2` splits as `α_n + β_n` where
//!
//! ```text
//! α_n(u) = -4 sin(u/2) (sin((n + 11/2)u) cos 2u + sin(nu) cos(3u/2))
//! β_n(u) = cos((n - 5/2)u) / (2 cos(u/2))
//! ```
//!
//! `γ_n(0) = 1/2` and, for `n >= 11`, `γ_n(π/(2n-5)) < 0`, so `γ_n` changes
//! sign on `(0, π/(2n-5))`. The first sign change is located by a uniform
//! scan followed by bisection. Everything here is `f64`; all conclusions
//! are about signs at bracket endpoints.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{CycloZ6, LaurentPoly};
use crate::family::kn_alexander_closed;

/// Uniform samples used to look for the first sign change.
pub const SCAN_SAMPLES: usize = 4096;
/// Bisection stops once the bracket is narrower than this.
pub const BRACKET_WIDTH: f64 = 1e-12;
/// `λ_m` is this fraction of the first sign change of `γ_{a_m}`.
pub const LAMBDA_SAFETY: f64 = 0.99;
/// Smallest `n` for which the sign argument applies.
pub const MIN_ROOT_INDEX: i64 = 11;

/// `ψ_n = t^{-n-8} Δ_{K_n}`, symmetric under `t -> t^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetrizedPoly {
    pub n: i64,
    pub psi: LaurentPoly,
}

impl SymmetrizedPoly {
    pub fn new(n: i64) -> Result<Self> {
        let psi = kn_alexander_closed(n)?.shift(-n - 8);
        Ok(SymmetrizedPoly { n, psi })
    }

    /// `ψ_n(e^{iu}) / 2` summed term by term from the integer coefficients.
    pub fn half_on_circle(&self, u: f64) -> f64 {
        use num_traits::ToPrimitive;
        // ψ is symmetric, so the imaginary parts cancel
        self.psi.terms().map(|(c, e)| c.to_f64().unwrap() * (e as f64 * u).cos()).sum::<f64>() / 2.0
    }
}

/// `α_n` as the cosine sum it is defined by, half of the outer part of `ψ_n`.
pub fn alpha_cosine_sum(n: i64, u: f64) -> f64 {
    let n = n as f64;
    ((n + 8.0) * u).cos() - ((n + 7.0) * u).cos() + ((n + 4.0) * u).cos() - ((n + 3.0) * u).cos()
        + ((n + 2.0) * u).cos()
        - ((n + 1.0) * u).cos()
        + ((n - 1.0) * u).cos()
        - ((n - 2.0) * u).cos()
}

/// `α_n` in product form.
pub fn alpha(n: i64, u: f64) -> f64 {
    let n = n as f64;
    -4.0 * (u / 2.0).sin() * (((n + 5.5) * u).sin() * (2.0 * u).cos() + (n * u).sin() * (1.5 * u).cos())
}

pub fn beta(n: i64, u: f64) -> f64 {
    ((n as f64 - 2.5) * u).cos() / (2.0 * (u / 2.0).cos())
}

fn gamma_unchecked(n: i64, u: f64) -> f64 {
    alpha(n, u) + beta(n, u)
}

/// `γ_n(u) = α_n(u) + β_n(u)` for `u ∈ (0, π)`.
pub fn gamma_eval(n: i64, u: f64) -> Result<f64> {
    if !(u > 0.0 && u < PI) {
        return Err(Error::DomainError(u));
    }
    Ok(gamma_unchecked(n, u))
}

/// Right end `π/(2n-5)` of the scan interval.
pub fn scan_limit(n: i64) -> f64 {
    PI / (2 * n - 5) as f64
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootLocalization {
    pub n: i64,
    /// `γ_n` has opposite signs at the two ends.
    pub bracket: (f64, f64),
    pub root: f64,
    /// `|γ_n(root)|`
    pub residual: f64,
}

/// First sign change of `γ_n` on `(0, π/(2n-5))`, bisected to
/// [`BRACKET_WIDTH`].
pub fn locate_first_root(n: i64) -> Result<RootLocalization> {
    if n < MIN_ROOT_INDEX {
        return Err(Error::InvalidParameter(format!("root localization needs n >= {MIN_ROOT_INDEX}, got {n}")));
    }
    let hi = scan_limit(n);
    let f = |u: f64| gamma_unchecked(n, u);
    let step = hi / SCAN_SAMPLES as f64;
    let mut prev = (0.0, f(0.0));
    let mut found = None;
    for k in 1..=SCAN_SAMPLES {
        let u = if k == SCAN_SAMPLES { hi } else { k as f64 * step };
        let v = f(u);
        if (v < 0.0) != (prev.1 < 0.0) {
            found = Some((prev.0, u));
            break;
        }
        prev = (u, v);
    }
    let (mut a, mut b) = found.ok_or(Error::NoSignChangeFound { n })?;
    let fa_negative = f(a) < 0.0;
    while b - a >= BRACKET_WIDTH {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if (f(m) < 0.0) == fa_negative {
            a = m;
        } else {
            b = m;
        }
    }
    let root = 0.5 * (a + b);
    Ok(RootLocalization { n, bracket: (a, b), root, residual: f(root).abs() })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GreedySequence {
    pub terms: Vec<i64>,
    pub radii: Vec<f64>,
}

/// `a_1 = 11`; `λ_m = min(λ_{m-1}, 0.99 u_{a_m})`; `a_{m+1}` is the least
/// integer above `a_m` with `π/(2a_{m+1}-5) < λ_m`.
pub fn greedy_sequence(count: usize) -> Result<GreedySequence> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be at least 1".into()));
    }
    let mut terms = vec![MIN_ROOT_INDEX];
    let mut radii: Vec<f64> = Vec::with_capacity(count);
    loop {
        let a = *terms.last().unwrap();
        let candidate = LAMBDA_SAFETY * locate_first_root(a)?.root;
        let lambda = radii.last().map_or(candidate, |&l| l.min(candidate));
        radii.push(lambda);
        if terms.len() == count {
            break;
        }
        let mut next = a + 1;
        while scan_limit(next) >= lambda {
            next += 1;
        }
        terms.push(next);
    }
    Ok(GreedySequence { terms, radii })
}

/// `ψ_n(ζ)` exactly, `ζ = e^{2πi/6}`.
pub fn psi_at_zeta6(n: i64) -> Result<CycloZ6> {
    Ok(CycloZ6::eval(&SymmetrizedPoly::new(n)?.psi))
}
