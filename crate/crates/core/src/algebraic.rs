//! Algebraic knots described by multiplicity sequences of unibranched plane
//! curve singularities.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{int, rat, LaurentPoly, PlFunction, Rational};

/// Nonincreasing multiplicities `m_1 >= ... >= m_n >= 2`. Empty for a smooth point.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct MultiplicitySequence(Vec<i64>);

impl MultiplicitySequence {
    pub fn new(mults: Vec<i64>) -> Result<Self> {
        if mults.iter().any(|&m| m < 2) {
            return Err(Error::InvalidParameter("multiplicities must be at least 2".into()));
        }
        if mults.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter("multiplicities must be nonincreasing".into()));
        }
        Ok(MultiplicitySequence(mults))
    }

    pub fn smooth() -> Self {
        MultiplicitySequence(Vec::new())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_smooth(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of the singular point itself, `m_1` (1 when smooth).
    pub fn multiplicity(&self) -> i64 {
        self.0.first().copied().unwrap_or(1)
    }

    /// Merged sequence of two singularities, re-sorted.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v: Vec<i64> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        MultiplicitySequence(v)
    }

    pub fn milnor(&self) -> i64 {
        self.0.iter().map(|m| m * (m - 1)).sum()
    }

    pub fn omega(&self) -> i64 {
        self.0.iter().map(|m| m - 1).sum()
    }

    /// `Σ (m_i² - 1)`.
    pub fn minus_three_integral(&self) -> i64 {
        self.0.iter().map(|m| m * m - 1).sum()
    }
}

fn check_pq(p: i64, q: i64) -> Result<()> {
    if p < 2 || q <= p {
        return Err(Error::InvalidParameter(format!("need 2 <= p < q, got ({p}, {q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidParameter(format!("p and q must be coprime, got ({p}, {q})")));
    }
    Ok(())
}

/// Multiplicity sequence of `x^p = y^q`: each blow-up replaces `(p, q)`
/// by the sorted pair `(p, q - p)` and records the smaller entry, until it
/// reaches 1.
pub fn multiplicity_sequence(p: i64, q: i64) -> Result<MultiplicitySequence> {
    check_pq(p, q)?;
    let (mut a, mut b) = (p, q);
    let mut mults = Vec::new();
    while a > 1 {
        mults.push(a);
        let c = b - a;
        (a, b) = (a.min(c), a.max(c));
    }
    MultiplicitySequence::new(mults)
}

/// `Υ_m(t) = -i(i+1) - m(m-1-2i)t/2` on `[2i/m, (2i+2)/m]`, `i = 0..m-1`.
pub fn upsilon_block(m: i64) -> Result<PlFunction> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("block index must be at least 2, got {m}")));
    }
    let breaks: Vec<Rational> = (0..=m).map(|i| rat(2 * i, m)).collect();
    let pieces: Vec<(Rational, Rational)> = (0..m).map(|i| (rat(-m * (m - 1 - 2 * i), 2), int(-i * (i + 1)))).collect();
    PlFunction::from_pieces(&breaks, &pieces)
}

/// Pointwise sum of the blocks `Υ_{m_i}`.
pub fn upsilon_from_mults(ms: &MultiplicitySequence) -> PlFunction {
    ms.0.iter().map(|&m| upsilon_block(m).expect("entries are >= 2")).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub mults: MultiplicitySequence,
    pub milnor: i64,
    pub genus: i64,
    pub omega: i64,
    #[serde(rename = "minus3I")]
    pub minus_three_integral: i64,
    pub upsilon: PlFunction,
}

pub fn singularity_report(ms: &MultiplicitySequence) -> SingularityReport {
    let upsilon = upsilon_from_mults(ms);
    let minus_three_integral = ms.minus_three_integral();
    assert_eq!(
        upsilon.integrate() * int(-3),
        int(minus_three_integral),
        "block integrals disagree with the closed formula for {:?}",
        ms.0
    );
    let milnor = ms.milnor();
    SingularityReport { mults: ms.clone(), milnor, genus: milnor / 2, omega: ms.omega(), minus_three_integral, upsilon }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityVerdict {
    pub p: i64,
    pub q: i64,
    pub omega: i64,
    pub milnor: i64,
    pub multiplicity: i64,
    /// `ω < p + q`
    pub omega_below_p_plus_q: bool,
    /// `μ <= m ω`
    pub milnor_bounded: bool,
}

pub fn check_inequalities(p: i64, q: i64) -> Result<InequalityVerdict> {
    let ms = multiplicity_sequence(p, q)?;
    let (omega, milnor, m) = (ms.omega(), ms.milnor(), ms.multiplicity());
    Ok(InequalityVerdict {
        p,
        q,
        omega,
        milnor,
        multiplicity: m,
        omega_below_p_plus_q: omega < p + q,
        milnor_bounded: milnor <= m * omega,
    })
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    check_pq(p, q)?;
    let tk_minus_one = |k: i64| LaurentPoly::from_terms([(1, k), (-1, 0)]);
    let num = &tk_minus_one(p * q) * &tk_minus_one(1);
    let den = &tk_minus_one(p) * &tk_minus_one(q);
    num.div_exact(&den)?.normalize_alexander()
}

/// All coprime pairs `2 <= p < q <= max`.
pub fn coprime_pairs(max: i64) -> Vec<(i64, i64)> {
    (2..=max).flat_map(|p| (p + 1..=max).map(move |q| (p, q))).filter(|&(p, q)| p.gcd(&q) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn multiplicity_sequences() {
        assert_eq!(multiplicity_sequence(2, 7).unwrap().as_slice(), &[2, 2, 2]);
        assert_eq!(multiplicity_sequence(3, 4).unwrap().as_slice(), &[3]);
        assert_eq!(multiplicity_sequence(3, 5).unwrap().as_slice(), &[3, 2]);
        assert_eq!(multiplicity_sequence(5, 13).unwrap().as_slice(), &[5, 5, 3, 2]);
        assert!(multiplicity_sequence(4, 6).is_err());
        assert!(multiplicity_sequence(1, 6).is_err());
        assert!(multiplicity_sequence(5, 3).is_err());
        for k in 1..8 {
            assert_eq!(multiplicity_sequence(2, 2 * k + 1).unwrap().as_slice(), vec![2; k as usize].as_slice());
        }
    }

    #[test]
    fn sequence_validation() {
        assert!(MultiplicitySequence::new(vec![2, 3]).is_err());
        assert!(MultiplicitySequence::new(vec![3, 1]).is_err());
        assert!(MultiplicitySequence::new(vec![]).unwrap().is_smooth());
    }

    #[test]
    fn blocks() {
        let tent = PlFunction::new([(int(0), int(0)), (int(1), int(-1)), (int(2), int(0))]).unwrap();
        assert_eq!(upsilon_block(2).unwrap(), tent);
        // m = 3: -3t on [0, 2/3], -2 on [2/3, 4/3], -6 + 3t on [4/3, 2]
        let b3 = upsilon_block(3).unwrap();
        assert_eq!(b3.breakpoints(), &[int(0), rat(2, 3), rat(4, 3), int(2)]);
        assert_eq!(b3.values(), &[int(0), int(-2), int(-2), int(0)]);
        assert_eq!(b3.slopes(), vec![int(-3), int(0), int(3)]);
        for m in 2..=10 {
            assert_eq!(upsilon_block(m).unwrap().integrate(), rat(1 - m * m, 3));
        }
        assert!(upsilon_block(1).is_err());
    }

    #[test]
    fn block_sums() {
        let t27 = upsilon_from_mults(&MultiplicitySequence::new(vec![2, 2, 2]).unwrap());
        assert_eq!(t27.slopes()[0], int(-3));
        assert_eq!(t27.eval(&int(1)), Some(int(-3)));
        assert_eq!(upsilon_from_mults(&MultiplicitySequence::smooth()), PlFunction::zero());
    }

    #[test]
    fn singularity_reports() {
        let r = singularity_report(&MultiplicitySequence::new(vec![2]).unwrap());
        assert_eq!((r.milnor, r.omega, r.minus_three_integral, r.genus), (2, 1, 3, 1));
        let r = singularity_report(&MultiplicitySequence::new(vec![2, 2, 2]).unwrap());
        assert_eq!((r.milnor, r.omega), (6, 3));
        let r = singularity_report(&MultiplicitySequence::new(vec![3]).unwrap());
        assert_eq!((r.milnor, r.omega, r.minus_three_integral), (6, 2, 8));
        let smooth = singularity_report(&MultiplicitySequence::smooth());
        assert_eq!((smooth.milnor, smooth.omega, smooth.genus), (0, 0, 0));
    }

    #[test]
    fn inequalities() {
        let v = check_inequalities(2, 7).unwrap();
        assert_eq!((v.omega, v.milnor), (3, 6));
        assert!(v.omega_below_p_plus_q && v.milnor_bounded);
        assert_eq!(v.milnor, v.multiplicity * v.omega);
        let v = check_inequalities(3, 4).unwrap();
        assert_eq!((v.omega, v.milnor), (2, 6));
        let v = check_inequalities(6, 7).unwrap();
        assert_eq!((v.omega, v.milnor, v.multiplicity), (5, 30, 6));
        assert!(v.milnor_bounded && v.omega_below_p_plus_q);
        assert!(check_inequalities(4, 6).is_err());
    }

    #[test]
    fn torus_polynomials() {
        assert_eq!(torus_alexander(2, 3).unwrap(), p("1 - t + t^2"));
        assert_eq!(torus_alexander(3, 4).unwrap(), p("1 - t + t^3 - t^5 + t^6"));
        assert_eq!(torus_alexander(2, 5).unwrap(), p("1 - t + t^2 - t^3 + t^4"));
        assert!(torus_alexander(3, 6).is_err());
    }

    #[test]
    fn genus_agrees_three_ways() {
        for (a, b) in coprime_pairs(12) {
            let r = singularity_report(&multiplicity_sequence(a, b).unwrap());
            assert_eq!(r.genus, (a - 1) * (b - 1) / 2);
            assert_eq!(torus_alexander(a, b).unwrap().max_degree(), 2 * r.genus);
        }
    }

    fn arb_mults() -> impl Strategy<Value = MultiplicitySequence> {
        proptest::collection::vec(2i64..=9, 0..=6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            MultiplicitySequence::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn closed_formula_matches_exact_integral(ms in arb_mults()) {
            let f = upsilon_from_mults(&ms);
            prop_assert_eq!(f.integrate() * int(-3), int(ms.minus_three_integral()));
            prop_assert!(f.is_convex());
        }

        #[test]
        fn omega_is_additive(a in arb_mults(), b in arb_mults()) {
            prop_assert_eq!(a.concat(&b).omega(), a.omega() + b.omega());
            prop_assert_eq!(
                upsilon_from_mults(&a.concat(&b)),
                &upsilon_from_mults(&a) + &upsilon_from_mults(&b)
            );
        }

        #[test]
        fn orevkov_bound(ms in arb_mults()) {
            prop_assert!(ms.milnor() <= ms.multiplicity() * ms.omega());
        }
    }
}
