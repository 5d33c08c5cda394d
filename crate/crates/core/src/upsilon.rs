//! From an L-space knot polynomial to Υ.
//!
//! The pipeline is: check that `Δ = 1 + (t-1)(t^{c_1} + ... + t^{c_g})`,
//! read off the gaps `c_i` of the formal semigroup, walk the gap staircase
//! from `(-g, 0)` to `(g, 2g)` with steps `u = (1, 2)` and `h = (1, 0)`,
//! take its lower convex hull, and Legendre–Fenchel transform the hull into
//! `Υ(t) = max_j (t x_j - y_j)` on `[0, 2]`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{int, LaurentPoly, PlFunction, Rational};

/// Gap exponents `c_1 < ... < c_g` of an L-space knot polynomial.
///
/// `d` must be normalized (lowest degree 0, constant term 1). The nonzero
/// coefficients must be `±1`, alternate in sign, start and end with `+1`,
/// and be palindromic.
pub fn validate_lspace_form(d: &LaurentPoly) -> Result<Vec<i64>> {
    let bad = |why: &str| Err(Error::NotLSpaceForm(format!("{why}: {d}")));
    if d.is_zero() {
        return bad("zero polynomial");
    }
    if d.min_degree() != 0 {
        return bad("lowest degree must be 0");
    }
    let mut exps: Vec<(i64, bool)> = Vec::new();
    for (c, e) in d.terms() {
        if !c.abs().is_one() {
            return bad(&format!("coefficient of t^{e} is not ±1"));
        }
        exps.push((e, c.is_positive()));
    }
    if exps.iter().enumerate().any(|(i, &(_, pos))| pos != (i % 2 == 0)) {
        return bad("nonzero coefficients must alternate +1, -1, ..., +1");
    }
    if exps.len().is_multiple_of(2) {
        return bad("leading coefficient must be +1");
    }
    if !d.is_palindromic() {
        return bad("not symmetric");
    }
    let mut gaps = Vec::new();
    for pair in exps[1..].chunks(2) {
        gaps.extend(pair[0].0..pair[1].0);
    }
    Ok(gaps)
}

/// `S = Z_{>=0} \ {c_1, ..., c_g}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalSemigroup {
    genus: i64,
    gaps: Vec<i64>,
}

impl FormalSemigroup {
    pub fn from_gaps(gaps: Vec<i64>) -> Result<Self> {
        if gaps.first().is_some_and(|&c| c < 1) || gaps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter("gaps must be strictly increasing positive integers".into()));
        }
        Ok(FormalSemigroup { genus: gaps.len() as i64, gaps })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && self.gaps.binary_search(&n).is_err()
    }

    /// Elements of `S` below `bound`, ascending.
    pub fn elements_below(&self, bound: i64) -> Vec<i64> {
        (0..bound).filter(|&n| self.contains(n)).collect()
    }

    /// Whether `S` is closed under addition, with the first failing pair
    /// `(a, b)`, `a <= b`, in lexicographic order.
    ///
    /// Every integer `>= 2g` lies in `S`, so only `a, b < 2g` need checking.
    pub fn closed_under_addition(&self) -> (bool, Option<(i64, i64)>) {
        let elems = self.elements_below(2 * self.genus);
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i..] {
                if !self.contains(a + b) {
                    return (false, Some((a, b)));
                }
            }
        }
        (true, None)
    }
}

/// Membership in `S` read off the power series `Δ(t) / (1 - t)` up to
/// degree `upto`: the coefficient of `t^k` is the sum of the coefficients
/// of `Δ` through degree `k`.
pub fn series_membership(d: &LaurentPoly, upto: i64) -> Vec<BigInt> {
    let mut acc = BigInt::zero();
    (0..=upto)
        .map(|k| {
            acc += d.coeff(k);
            acc.clone()
        })
        .collect()
}

pub fn formal_semigroup(d: &LaurentPoly) -> Result<FormalSemigroup> {
    let gaps = validate_lspace_form(d)?;
    let s = FormalSemigroup::from_gaps(gaps)?;
    let series = series_membership(d, 2 * s.genus);
    for (k, c) in series.iter().enumerate() {
        let expected = if s.contains(k as i64) { BigInt::one() } else { BigInt::zero() };
        if *c != expected {
            return Err(Error::NotLSpaceForm(format!("power series of Δ/(1-t) disagrees with gaps at t^{k}")));
        }
    }
    Ok(s)
}

pub fn is_closed_under_addition(s: &FormalSemigroup) -> (bool, Option<(i64, i64)>) {
    s.closed_under_addition()
}

/// Lattice path from `(-g, 0)` to `(g, 2g)`; each step is `(1, 2)` or `(1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapStaircase {
    points: Vec<(i64, i64)>,
}

impl GapStaircase {
    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    /// Alternating run lengths `a_1 - a_0, a_2 - a_1, ...`, starting with an up-run.
    pub fn jumps(&self) -> Vec<i64> {
        let mut runs: Vec<i64> = Vec::new();
        let mut last_up = None;
        for w in self.points.windows(2) {
            let up = w[1].1 > w[0].1;
            if last_up == Some(up) {
                *runs.last_mut().unwrap() += 1;
            } else {
                runs.push(1);
                last_up = Some(up);
            }
        }
        runs
    }
}

/// Walks the staircase from `(-g, 0)`: `a_1 - a_0` up-steps, `a_2 - a_1`
/// flat steps, and so on, where `a_0 < a_1 < ...` are the exponents of Δ.
pub fn gap_staircase(gaps: &[i64], g: i64) -> Result<GapStaircase> {
    // exponents a_i from maximal runs of gaps: a_{2j-1} = run start, a_{2j} = run end + 1
    let mut exps = vec![0i64];
    let mut i = 0;
    while i < gaps.len() {
        let mut j = i;
        while j + 1 < gaps.len() && gaps[j + 1] == gaps[j] + 1 {
            j += 1;
        }
        exps.push(gaps[i]);
        exps.push(gaps[j] + 1);
        i = j + 1;
    }
    let mut pts = vec![(-g, 0)];
    let (mut x, mut y) = (-g, 0);
    for (k, w) in exps.windows(2).enumerate() {
        let up = k % 2 == 0;
        for _ in 0..w[1] - w[0] {
            x += 1;
            if up {
                y += 2;
            }
            pts.push((x, y));
        }
    }
    // the trailing run of semigroup elements up to 2g is all up-steps
    while x < g {
        x += 1;
        y += 2;
        pts.push((x, y));
    }
    if (x, y) != (g, 2 * g) {
        return Err(Error::MalformedStaircase { x, y, g });
    }
    Ok(GapStaircase { points: pts })
}

/// Lower convex hull of the staircase; slopes strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexHullVertices {
    vertices: Vec<(i64, i64)>,
}

impl ConvexHullVertices {
    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn slopes(&self) -> Vec<Rational> {
        self.vertices.windows(2).map(|w| Rational::new((w[1].1 - w[0].1).into(), (w[1].0 - w[0].0).into())).collect()
    }
}

/// Monotone chain over points already sorted by strictly increasing `x`.
/// Collinear interior points are dropped.
pub fn convex_minorant(s: &GapStaircase) -> ConvexHullVertices {
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(s.points.len());
    for &p in &s.points {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 - a.0) as i128 * (p.1 - a.1) as i128 - (b.1 - a.1) as i128 * (p.0 - a.0) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    ConvexHullVertices { vertices: hull }
}

/// `Υ(t) = max_j (t x_j - y_j)` over the hull vertices, for `t ∈ [0, 2]`.
///
/// Vertex `j` is the maximizer between the slopes of its two adjacent hull
/// edges, so the breakpoints of Υ are the edge slopes lying in `(0, 2)`.
pub fn legendre_upsilon(h: &ConvexHullVertices) -> PlFunction {
    let slopes = h.slopes();
    let vertex_value = |j: usize, t: &Rational| t * int(h.vertices[j].0) - int(h.vertices[j].1);
    // maximizer at t: first vertex whose right edge slope is >= t
    let argmax = |t: &Rational| slopes.iter().position(|s| s >= t).unwrap_or(slopes.len());
    let two = PlFunction::domain_end();
    let mut ts = vec![Rational::zero()];
    ts.extend(slopes.iter().filter(|s| s.is_positive() && **s < two).cloned());
    ts.push(two);
    let pts: Vec<(Rational, Rational)> = ts
        .into_iter()
        .map(|t| {
            let v = vertex_value(argmax(&t), &t);
            (t, v)
        })
        .collect();
    PlFunction::new(pts).expect("hull slopes are strictly increasing")
}

/// Full staircase route from a normalized polynomial to Υ.
pub fn upsilon_of(d: &LaurentPoly) -> Result<PlFunction> {
    let gaps = validate_lspace_form(d)?;
    let g = gaps.len() as i64;
    let stair = gap_staircase(&gaps, g)?;
    Ok(legendre_upsilon(&convex_minorant(&stair)))
}

/// Invariants of one L-space knot polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub genus: i64,
    pub tau: i64,
    #[serde(serialize_with = "ser_pl")]
    pub upsilon: PlFunction,
    #[serde(serialize_with = "ser_rat")]
    pub integral: Rational,
    #[serde(rename = "minus3I", serialize_with = "ser_rat")]
    pub minus_three_integral: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub omega: Rational,
    #[serde(rename = "integral_verdict")]
    pub is_integral: bool,
    pub semigroup_closed: bool,
    #[serde(rename = "witness")]
    pub closure_witness: Option<(i64, i64)>,
}

fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_pl<S: serde::Serializer>(f: &PlFunction, s: S) -> std::result::Result<S::Ok, S::Error> {
    f.serialize(s)
}

impl InvariantReport {
    /// Denominator of `-3∫Υ` (1 when integral).
    pub fn denominator(&self) -> BigInt {
        self.minus_three_integral.denom().clone()
    }
}

/// Runs the whole pipeline. `τ` is taken to be the genus, as for every
/// L-space knot.
pub fn report(d: &LaurentPoly, name: &str) -> Result<InvariantReport> {
    let semigroup = formal_semigroup(d)?;
    let genus = semigroup.genus();
    let stair = gap_staircase(semigroup.gaps(), genus)?;
    let upsilon = legendre_upsilon(&convex_minorant(&stair));
    let integral = upsilon.integrate();
    let minus_three_integral = &integral * int(-3);
    let tau = genus;
    let omega = &minus_three_integral - int(2 * tau);
    let (semigroup_closed, closure_witness) = semigroup.closed_under_addition();
    Ok(InvariantReport {
        name: name.to_string(),
        genus,
        tau,
        upsilon,
        is_integral: minus_three_integral.denom().is_one(),
        integral,
        minus_three_integral,
        omega,
        semigroup_closed,
        closure_witness,
    })
}

/// Like [`report`], but first fixes the `±t^k` ambiguity of the input.
pub fn report_unnormalized(d: &LaurentPoly, name: &str) -> Result<InvariantReport> {
    let d = d.normalize_alexander().map_err(|e| Error::NotLSpaceForm(e.to_string()))?;
    report(&d, name)
}
