//! Braid words, the reduced Burau representation and Alexander polynomials
//! of braid closures.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::LaurentPoly;

/// A word in the Artin generators of the braid group on `strands` strands.
/// Letter `k` stands for `σ_k`, `-k` for its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidParameter(format!("a braid needs at least 2 strands, got {strands}")));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::InvalidParameter(format!("letter {bad} out of range for {strands} strands")));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other` on the same number of strands.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::InvalidParameter("strand counts differ".into()));
        }
        let letters = self.letters.iter().chain(&other.letters).copied().collect();
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The permutation of strand positions induced by the word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            perm.swap(k - 1, k);
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    fn require_knot(&self) -> Result<()> {
        match self.closure_components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }
}

/// `strands:4 2 1 3 2 ...`; letters may be separated by spaces or commas.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix("strands:")
            .ok_or_else(|| Error::Parse(format!("braid word must start with 'strands:', got {s:?}")))?;
        let mut nums = rest
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| tok.replace('\u{2212}', "-").parse::<i64>().map_err(|e| Error::Parse(format!("{tok:?}: {e}"))));
        let strands = nums.next().ok_or_else(|| Error::Parse("missing strand count".into()))??;
        if strands < 0 {
            return Err(Error::Parse("negative strand count".into()));
        }
        let letters = nums
            .map(|n| n.and_then(|v| i32::try_from(v).map_err(|_| Error::Parse(format!("letter {v} too large")))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands as usize, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strands:{}", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// `[2,1,3,2, (3,2,1)^4, 3^{2(n+1)}, 2]` on four strands; its closure is `K_n`.
pub fn kn_braid(n: i64) -> Result<BraidWord> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("K_n is defined for n >= 1, got {n}")));
    }
    let mut letters = vec![2, 1, 3, 2];
    for _ in 0..4 {
        letters.extend([3, 2, 1]);
    }
    letters.extend(std::iter::repeat_n(3, 2 * n as usize + 2));
    letters.push(2);
    BraidWord::new(4, letters)
}

/// Square matrix over `Z[t, t^-1]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMatrix {
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl BurauMatrix {
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = LaurentPoly::one();
        }
        BurauMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.size + j]
    }

    fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.size + j] = v;
    }

    /// Reduced Burau image of `σ_k^{±1}` in `B_{size+1}`.
    ///
    /// `σ_k` acts on rows/columns `k-1, k, k+1` (1-based) by the block
    /// `[[1,0,0],[t,-t,1],[0,0,1]]`, truncated at the edges.
    pub fn generator(size: usize, letter: i32) -> Self {
        let mut m = Self::identity(size);
        let i = letter.unsigned_abs() as usize - 1;
        let t = |e: i64| LaurentPoly::monomial(1, e);
        if letter > 0 {
            m.set(i, i, -t(1));
            if i > 0 {
                m.set(i, i - 1, t(1));
            }
            if i + 1 < size {
                m.set(i, i + 1, t(0));
            }
        } else {
            m.set(i, i, -t(-1));
            if i > 0 {
                m.set(i, i - 1, t(0));
            }
            if i + 1 < size {
                m.set(i, i + 1, t(-1));
            }
        }
        m
    }

    pub fn determinant(&self) -> LaurentPoly {
        bareiss_det(self.size, self.entries.clone())
    }

    /// `I - self`.
    pub fn one_minus(&self) -> Self {
        let mut out = Self::identity(self.size);
        for (o, e) in out.entries.iter_mut().zip(&self.entries) {
            *o = &*o - e;
        }
        out
    }
}

impl Mul for &BurauMatrix {
    type Output = BurauMatrix;

    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        let n = self.size;
        let mut out = BurauMatrix { size: n, entries: vec![LaurentPoly::zero(); n * n] };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = &out.entries[i * n + j] + &(a * b);
                        out.entries[i * n + j] = cur;
                    }
                }
            }
        }
        out
    }
}

/// Fraction-free Gaussian elimination; every division is exact.
fn bareiss_det(n: usize, mut m: Vec<LaurentPoly>) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return LaurentPoly::zero();
            };
            for j in 0..n {
                m.swap(k * n + j, r * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i * n + j] * &m[k * n + k]) - &(&m[i * n + k] * &m[k * n + j]);
                m[i * n + j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = m[k * n + k].clone();
    }
    let det = m[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

pub fn burau(w: &BraidWord) -> BurauMatrix {
    let size = w.strands - 1;
    w.letters.iter().fold(BurauMatrix::identity(size), |acc, &l| &acc * &BurauMatrix::generator(size, l))
}

/// `det(I - B(w)) (1 - t) / (1 - t^n)`, normalized to lowest degree 0 and
/// value 1 at `t = 1`.
pub fn alexander_of_closure(w: &BraidWord) -> Result<LaurentPoly> {
    w.require_knot()?;
    let d = burau(w).one_minus().determinant();
    if d.is_zero() {
        return Err(Error::NormalizationFailure { value: "0".into() });
    }
    let one_minus_t = LaurentPoly::from_terms([(1, 0), (-1, 1)]);
    let one_minus_tn = LaurentPoly::from_terms([(1, 0), (-1, w.strands as i64)]);
    (&d * &one_minus_t).div_exact(&one_minus_tn)?.normalize_alexander()
}

/// Genus `(length - strands + 1) / 2` of the fibered knot closing a positive braid.
pub fn positive_braid_genus(w: &BraidWord) -> Result<i64> {
    if let Some(&letter) = w.letters.iter().find(|&&l| l < 0) {
        return Err(Error::NotPositive { letter });
    }
    w.require_knot()?;
    Ok((w.len() as i64 - w.strands as i64 + 1) / 2)
}
