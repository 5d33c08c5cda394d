//! The knots `K_n`, `n >= 1`: closures of the four-braids
//! `[2,1,3,2,(3,2,1)^4,3^{2(n+1)},2]`, obtained from a fixed three-component
//! link `L = K ∪ C_1 ∪ C_2` by surgery on `C_1` and `C_2`.

use crate::error::{Error, Result};
use crate::exactmath::{int, rat, LaurentPoly, PlFunction, TriLaurentPoly};

/// Data of the surgery link `L` shared by every `K_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyConstants {
    /// Multivariable Alexander polynomial of `L`, variables `x, y, z`
    /// for the meridians of `K, C_1, C_2`.
    pub delta_l: TriLaurentPoly,
    pub linking_k_c1: i64,
    pub linking_k_c2: i64,
    pub linking_c1_c2: i64,
}

impl FamilyConstants {
    pub fn new() -> Self {
        let terms: [(i64, (i64, i64, i64)); 14] = [
            (1, (7, 3, 1)),
            (-1, (5, 3, 1)),
            (1, (5, 2, 1)),
            (1, (5, 2, 0)),
            (-1, (4, 2, 0)),
            (-1, (5, 1, 0)),
            (-2, (3, 2, 1)),
            (2, (4, 1, 0)),
            (1, (2, 2, 1)),
            (1, (3, 1, 1)),
            (-1, (2, 1, 1)),
            (-1, (2, 1, 0)),
            (1, (2, 0, 0)),
            (-1, (0, 0, 0)),
        ];
        FamilyConstants {
            delta_l: TriLaurentPoly::from_terms(terms),
            linking_k_c1: 4,
            linking_k_c2: 2,
            linking_c1_c2: 0,
        }
    }
}

impl Default for FamilyConstants {
    fn default() -> Self {
        Self::new()
    }
}

fn check_n(n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("K_n is defined for n >= 1, got {n}")));
    }
    Ok(())
}

/// `Δ_{K_n}` from its closed form:
/// `t^{2n+16} - t^{2n+15} + t^{2n+12} - t^{2n+11} + t^{2n+10} - t^{2n+9}
///  + t^9 (Σ_{i=1}^{n-1} (t^{2i} - t^{2i-1}) + 1) - t^7 + t^6 - t^5 + t^4 - t + 1`.
pub fn kn_alexander_closed(n: i64) -> Result<LaurentPoly> {
    check_n(n)?;
    let mut terms = vec![
        (1, 2 * n + 16),
        (-1, 2 * n + 15),
        (1, 2 * n + 12),
        (-1, 2 * n + 11),
        (1, 2 * n + 10),
        (-1, 2 * n + 9),
        (1, 9),
        (-1, 7),
        (1, 6),
        (-1, 5),
        (1, 4),
        (-1, 1),
        (1, 0),
    ];
    for i in 1..n {
        terms.push((1, 9 + 2 * i));
        terms.push((-1, 9 + 2 * i - 1));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// `Δ_{K_n}(t) = Δ_L(t, t^4, t^{2n+2}) / ((t^4 - 1)(t + 1))`, the Torres
/// reduction of the surgered link's polynomial, normalized.
pub fn kn_alexander_torres(n: i64) -> Result<LaurentPoly> {
    check_n(n)?;
    let c = FamilyConstants::new();
    let numerator = c.delta_l.substitute(1, c.linking_k_c1, 2 * (n + 1));
    let t4_minus_1 = LaurentPoly::from_terms([(1, 4), (-1, 0)]);
    let t_plus_1 = LaurentPoly::from_terms([(1, 1), (1, 0)]);
    numerator.div_exact(&(&t4_minus_1 * &t_plus_1))?.normalize_alexander()
}

/// `Υ_{K_n}`: `-(n+8)t` on `[0, 1/2]`, `-(n+4)t - 2` on `[1/2, 4/5]`,
/// `-(n-1)t - 6` on `[4/5, 1]`, and `Υ(t) = Υ(2 - t)` on `[1, 2]`.
pub fn kn_upsilon_closed(n: i64) -> Result<PlFunction> {
    check_n(n)?;
    let breaks = [int(0), rat(1, 2), rat(4, 5), int(1), rat(6, 5), rat(3, 2), int(2)];
    // right half mirrors the left: slope s, intercept c becomes slope -s, intercept c + 2s
    let left = [(int(-(n + 8)), int(0)), (int(-(n + 4)), int(-2)), (int(-(n - 1)), int(-6))];
    let right = left.iter().rev().map(|(s, c)| (-s.clone(), c + s * int(2)));
    let pieces: Vec<_> = left.iter().cloned().chain(right).collect();
    PlFunction::from_pieces(&breaks, &pieces)
}

/// `Υ_{K_{n+1}} - Υ_{K_n}`; equals the trefoil's Υ for every `n`.
pub fn kn_trefoil_difference(n: i64) -> Result<PlFunction> {
    Ok(&kn_upsilon_closed(n + 1)? - &kn_upsilon_closed(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upsilon::upsilon_of;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn tent() -> PlFunction {
        PlFunction::new([(int(0), int(0)), (int(1), int(-1)), (int(2), int(0))]).unwrap()
    }

    #[test]
    fn delta_l_checksum() {
        let c = FamilyConstants::new();
        assert_eq!(c.delta_l.len(), 14);
        assert_eq!(
            c.delta_l.to_string(),
            "x^7y^3z - x^5y^3z + x^5y^2z + x^5y^2 - x^5y - x^4y^2 + 2x^4y - 2x^3y^2z + x^3yz + x^2y^2z - x^2yz - x^2y + x^2 - 1"
        );
        assert_eq!(c.delta_l.substitute(1, 1, 1), p("t^11 - t^9 + t^8 + t^7 - 4t^6 + 4t^5 - t^4 - t^3 + t^2 - 1"));
        assert_eq!(c.delta_l.substitute(1, 0, 0), p("t^7 + t^4 - t^3 - 1"));
        assert_eq!(c.delta_l.substitute(0, 0, 0), LaurentPoly::zero());
    }

    #[test]
    fn torres_numerator_at_n1() {
        let c = FamilyConstants::new();
        assert_eq!(
            c.delta_l.substitute(1, 4, 4),
            p("t^23 - t^21 + t^17 - 2t^15 + t^14 + t^11 - t^10 + t^13 - t^12 - t^9 + 2t^8 - t^6 + t^2 - 1")
        );
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            kn_alexander_closed(1).unwrap(),
            p("t^18 - t^17 + t^14 - t^13 + t^12 - t^11 + t^9 - t^7 + t^6 - t^5 + t^4 - t + 1")
        );
        let k2 = kn_alexander_closed(2).unwrap();
        assert_eq!(k2.coeff(11), 1.into());
        assert_eq!(k2.coeff(10), (-1).into());
        assert_eq!(k2.coeff(9), 1.into());
        for n in 1..=10 {
            assert_eq!(kn_alexander_closed(n).unwrap().max_degree(), 2 * (n + 8));
        }
        assert!(kn_alexander_closed(0).is_err());
    }

    #[test]
    fn torres_matches_closed() {
        for n in [1, 2, 7] {
            assert_eq!(kn_alexander_torres(n).unwrap(), kn_alexander_closed(n).unwrap());
        }
    }

    #[test]
    fn torres_division_step() {
        let c = FamilyConstants::new();
        let num = c.delta_l.substitute(1, 4, 4);
        let den = p("t^4 - 1") * p("t + 1");
        assert_eq!(num.div_exact(&den).unwrap(), kn_alexander_closed(1).unwrap());
    }

    #[test]
    fn upsilon_closed_form() {
        let u1 = kn_upsilon_closed(1).unwrap();
        assert_eq!(u1.eval(&rat(1, 2)), Some(rat(-9, 2)));
        for n in 1..6 {
            let u = kn_upsilon_closed(n).unwrap();
            assert_eq!(u.eval(&int(1)), Some(int(-(n + 5))));
            for t in [rat(1, 4), rat(3, 4)] {
                assert_eq!(u.eval(&t), u.eval(&(int(2) - &t)));
            }
            assert_eq!(u, u.reflect());
            assert_eq!(u.integrate(), -(int(n) + rat(34, 5)));
        }
        // at n = 1 the middle segment is flat and merges away
        assert_eq!(u1.breakpoints(), &[int(0), rat(1, 2), rat(4, 5), rat(6, 5), rat(3, 2), int(2)]);
        assert_eq!(kn_upsilon_closed(2).unwrap().breakpoints().len(), 7);
        assert!(kn_upsilon_closed(0).is_err());
    }

    #[test]
    fn pipeline_matches_closed_upsilon() {
        for n in 1..8 {
            assert_eq!(upsilon_of(&kn_alexander_closed(n).unwrap()).unwrap(), kn_upsilon_closed(n).unwrap());
        }
    }

    #[test]
    fn trefoil_difference() {
        for n in [1, 5, 20] {
            let d = kn_trefoil_difference(n).unwrap();
            assert_eq!(d, tent());
            assert_eq!(d.integrate(), int(-1));
        }
    }
}
