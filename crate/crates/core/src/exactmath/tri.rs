//! Sparse Laurent polynomials in three variables `x, y, z`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;

pub type Exponent3 = (i64, i64, i64);

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TriLaurentPoly {
    terms: BTreeMap<Exponent3, BigInt>,
}

impl TriLaurentPoly {
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, Exponent3)>) -> Self {
        let mut map: BTreeMap<Exponent3, BigInt> = BTreeMap::new();
        for (c, e) in terms {
            *map.entry(e).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        TriLaurentPoly { terms: map }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exponent3) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent3, &BigInt)> {
        self.terms.iter()
    }

    /// Specializes `x -> t^ex, y -> t^ey, z -> t^ez`.
    pub fn substitute(&self, ex: i64, ey: i64, ez: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(&(a, b, c), coef)| (coef.clone(), a * ex + b * ey + c * ez)))
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, v: char, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{v}"),
        _ => write!(f, "{v}^{e}"),
    }
}

/// Descending lexicographic order, e.g. `x^7y^3z - x^5y^3z + ... - 1`.
impl fmt::Display for TriLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(a, b, c), coef)) in self.terms.iter().rev().enumerate() {
            let mag = coef.abs();
            match (k, coef.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = (a, b, c) == (0, 0, 0);
            if !mag.is_one() || constant {
                write!(f, "{mag}")?;
            }
            write_var(f, 'x', a)?;
            write_var(f, 'y', b)?;
            write_var(f, 'z', c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_monomial() {
        let p = TriLaurentPoly::from_terms([(1, (1, 1, 1))]);
        assert_eq!(p.substitute(1, 1, 1), LaurentPoly::monomial(1, 3));
    }

    #[test]
    fn absent_variables() {
        let p = TriLaurentPoly::from_terms([(1, (2, 0, 0)), (-1, (0, 0, 0))]);
        assert_eq!(p.substitute(1, 4, 2), "t^2 - 1".parse().unwrap());
    }

    #[test]
    fn like_terms_collect() {
        let p = TriLaurentPoly::from_terms([(1, (1, 0, 0)), (1, (0, 1, 0)), (-2, (0, 0, 1))]);
        assert!(p.substitute(1, 1, 1).is_zero());
        let q = TriLaurentPoly::from_terms([(3, (1, 2, 0)), (-3, (1, 2, 0))]);
        assert!(q.is_empty());
    }

    #[test]
    fn display_order() {
        let p = TriLaurentPoly::from_terms([(-1, (0, 0, 0)), (2, (4, 1, 0)), (1, (7, 3, 1))]);
        assert_eq!(p.to_string(), "x^7y^3z + 2x^4y - 1");
    }
}
