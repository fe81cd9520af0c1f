//! Power-series construction of associated Legendre functions.
//!
//! A function is `(1−x²)^{|m|/2}·P′(x)` where `P′` is a polynomial of degree
//! `i = ℓ − |m|`. Substituting a power series for `P′` gives the upper
//! triangular system `T·a = 0` with `T_kk = A − (|m|+k)(|m|+k+1)` and
//! `T_{k,k+2} = (k+1)(k+2)`; `A = (|m|+i)(|m|+i+1)` zeroes `T_ii` and the
//! coefficients follow from a two-term recursion.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{rational_str, HalfInt};
use crate::poly::Poly;
use crate::Rational;

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A validated `(ℓ, m)` pair: `ℓ ≥ |m|` and `ℓ − |m|` a non-negative integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuantumPair {
    #[serde(rename = "two_l")]
    l: HalfInt,
    #[serde(rename = "two_m")]
    m: HalfInt,
}

impl QuantumPair {
    pub fn new(l: HalfInt, m: HalfInt) -> Result<Self> {
        let invalid = |reason| Err(Error::InvalidPair { l, m, reason });
        if (l.twice() - m.twice()) % 2 != 0 {
            return invalid("l and m must both be integers or both half-odd-integers");
        }
        if l < m.abs() {
            return invalid("l must be at least |m|");
        }
        Ok(QuantumPair { l, m })
    }

    pub fn from_twice(two_l: i64, two_m: i64) -> Result<Self> {
        Self::new(HalfInt::from_twice(two_l), HalfInt::from_twice(two_m))
    }

    pub fn l(&self) -> HalfInt {
        self.l
    }

    pub fn m(&self) -> HalfInt {
        self.m
    }

    pub fn m_abs(&self) -> HalfInt {
        self.m.abs()
    }

    /// Polynomial degree `i = ℓ − |m|`.
    pub fn degree(&self) -> usize {
        ((self.l.twice() - self.m.twice().abs()) / 2) as usize
    }
}

impl fmt::Display for QuantumPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(l={}, m={})", self.l, self.m)
    }
}

/// `A_i = (|m|+i)(|m|+i+1) = ℓ(ℓ+1)`.
pub fn eigenvalue(m_abs: HalfInt, i: usize) -> Rational {
    let l = m_abs.to_rational() + int(i as i64);
    &l * (&l + int(1))
}

/// Leading `size × size` block of the coefficient matrix for a candidate `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TridiagonalSystem {
    m_abs: HalfInt,
    diag: Vec<Rational>,
    superdiag2: Vec<Rational>,
}

impl TridiagonalSystem {
    pub fn m_abs(&self) -> HalfInt {
        self.m_abs
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// `T_kk`.
    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    /// `T_{k,k+2}`, length `size − 2` (empty when `size < 3`).
    pub fn superdiag2(&self) -> &[Rational] {
        &self.superdiag2
    }

    /// Indices `k` with `T_kk = 0`.
    pub fn zero_diagonal(&self) -> Vec<usize> {
        self.diag
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_zero())
            .map(|(k, _)| k)
            .collect()
    }

    /// `T·a`, treating missing entries of `a` as zero.
    pub fn apply(&self, a: &[Rational]) -> Vec<Rational> {
        let at = |k: usize| a.get(k).cloned().unwrap_or_else(Rational::zero);
        (0..self.size())
            .map(|k| {
                let mut row = &self.diag[k] * at(k);
                if let Some(s) = self.superdiag2.get(k) {
                    row += s * at(k + 2);
                }
                row
            })
            .collect()
    }
}

pub fn build_system(m_abs: HalfInt, a_candidate: &Rational, size: usize) -> TridiagonalSystem {
    assert!(size >= 1, "system size must be positive");
    let m = m_abs.to_rational();
    let diag = (0..size)
        .map(|k| {
            let mk = &m + int(k as i64);
            a_candidate - &mk * (&mk + int(1))
        })
        .collect();
    let superdiag2 = (0..size.saturating_sub(2))
        .map(|k| int(((k + 1) * (k + 2)) as i64))
        .collect();
    TridiagonalSystem {
        m_abs,
        diag,
        superdiag2,
    }
}

/// Ratio `a_{k+2} / a_k` of the upward recursion for degree `i`.
fn upward_ratio(m_abs: HalfInt, i: usize, k: usize) -> Rational {
    let two_m = int(m_abs.twice());
    let num = int((i - k) as i64) * (two_m + int((i + k + 1) as i64));
    -num / int(((k + 1) * (k + 2)) as i64)
}

/// Coefficients `a_0..a_i` of `P′`, seeded with `a_{i mod 2} = 1`.
pub fn series_coefficients(m_abs: HalfInt, i: usize) -> Vec<Rational> {
    let mut a = vec![Rational::zero(); i + 1];
    let start = i % 2;
    a[start] = Rational::one();
    for k in (start..i.saturating_sub(1)).step_by(2) {
        a[k + 2] = &a[k] * upward_ratio(m_abs, i, k);
    }
    a
}

/// Rescales to coprime integers with a positive lowest-order nonzero entry.
pub fn normalize_smallest_integers(coeffs: &[Rational]) -> Result<Vec<Rational>> {
    let lowest = coeffs.iter().find(|c| !c.is_zero()).ok_or(Error::AllZero)?;
    let lcm_den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm_den / c.denom()))
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let sign = if lowest.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    Ok(scaled
        .into_iter()
        .map(|v| Rational::from_integer(v / &g * &sign))
        .collect())
}

/// Smallest positive seed `a_{i mod 2}` for which every coefficient of degree `i`
/// is an integer simultaneously for all `|m| ∈ {0, 1/2, 1, …}`.
///
/// Each ratio `a_{p+2j}/a_p` is a polynomial in `n = 2|m|`; it is integer-valued
/// on `n ∈ ℕ` exactly when its forward differences at `n = 0` are integers, so
/// the seed is the lcm of their denominators. Gives 1, 1, 1, 3, 3, 15, … .
pub fn degree_seed(i: usize) -> BigInt {
    let start = i % 2;
    let mut ratio: Poly<Rational> = Poly::constant(Rational::one());
    let mut seed = BigInt::one();
    for k in (start..i.saturating_sub(1)).step_by(2) {
        // −(i−k)(n + i + k + 1) / ((k+1)(k+2))
        let factor = Poly::new(vec![int((i + k + 1) as i64), Rational::one()])
            .scale(&(-int((i - k) as i64) / int(((k + 1) * (k + 2)) as i64)));
        ratio = &ratio * &factor;
        let deg = ratio.degree().unwrap_or(0);
        let mut values: Vec<Rational> = (0..=deg).map(|n| ratio.eval(&int(n as i64))).collect();
        for _ in 0..=deg {
            seed = seed.lcm(values[0].denom());
            values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
    }
    seed
}

/// Which scaling a function's coefficients carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    /// Integer coefficients, positive lowest-order term, seeded with
    /// [`degree_seed`]; the convention of the classical tables.
    SmallestIntegers,
    /// Produced by the three-term recurrence in `ℓ`.
    RecurrenceSeeded,
    /// Divided by `√N²`; only realized at evaluation time.
    UnitNorm,
}

/// `(1−x²)^{|m|/2} · Σ a_k x^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LegendreRepr", into = "LegendreRepr")]
pub struct LegendreFunction {
    m_abs: HalfInt,
    degree: usize,
    coeffs: Vec<Rational>,
    normalization: Normalization,
}

#[derive(Serialize, Deserialize)]
struct LegendreRepr {
    two_l: i64,
    two_m: i64,
    i: usize,
    #[serde(with = "rational_str::vec")]
    coeffs: Vec<Rational>,
    normalization: Normalization,
}

impl From<LegendreFunction> for LegendreRepr {
    fn from(f: LegendreFunction) -> Self {
        LegendreRepr {
            two_l: f.l().twice(),
            two_m: f.m_abs.twice(),
            i: f.degree,
            coeffs: f.coeffs,
            normalization: f.normalization,
        }
    }
}

impl TryFrom<LegendreRepr> for LegendreFunction {
    type Error = Error;
    fn try_from(r: LegendreRepr) -> Result<Self> {
        if r.coeffs.len() != r.i + 1 {
            return Err(Error::Malformed(format!(
                "{} coefficients for degree {}",
                r.coeffs.len(),
                r.i
            )));
        }
        let f =
            LegendreFunction::from_coeffs(HalfInt::from_twice(r.two_m), r.coeffs, r.normalization)?;
        if f.l().twice() != r.two_l {
            return Err(Error::Malformed(format!(
                "two_l = {} inconsistent with two_m = {} and i = {}",
                r.two_l, r.two_m, r.i
            )));
        }
        Ok(f)
    }
}

impl LegendreFunction {
    /// Wraps a coefficient list; the degree is the index of the last entry.
    pub fn from_coeffs(
        m_abs: HalfInt,
        coeffs: Vec<Rational>,
        normalization: Normalization,
    ) -> Result<Self> {
        if m_abs.twice() < 0 {
            return Err(Error::Malformed(format!("|m| = {m_abs} is negative")));
        }
        let degree = coeffs
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::Malformed("no coefficients".into()))?;
        if coeffs[degree].is_zero() {
            return Err(Error::Malformed("leading coefficient is zero".into()));
        }
        if coeffs
            .iter()
            .enumerate()
            .any(|(k, c)| (degree - k) % 2 == 1 && !c.is_zero())
        {
            return Err(Error::Malformed("polynomial has mixed parity".into()));
        }
        Ok(LegendreFunction {
            m_abs,
            degree,
            coeffs,
            normalization,
        })
    }

    pub fn m_abs(&self) -> HalfInt {
        self.m_abs
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn l(&self) -> HalfInt {
        self.m_abs + HalfInt::from_int(self.degree as i64)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn poly(&self) -> Poly<Rational> {
        Poly::new(self.coeffs.clone())
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn eigenvalue(&self) -> Rational {
        eigenvalue(self.m_abs, self.degree)
    }

    /// Exponent `|m|/2` of the `(1−x²)` factor.
    pub fn factor_exponent(&self) -> Rational {
        Rational::new(BigInt::from(self.m_abs.twice()), BigInt::from(4))
    }
}

impl fmt::Display for LegendreFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.factor_exponent();
        if e.is_zero() {
            write!(f, "{}", self.poly())
        } else if e.is_one() {
            write!(f, "(1−x²)·({})", self.poly())
        } else {
            write!(f, "(1−x²)^{{{e}}}·({})", self.poly())
        }
    }
}

/// `P_ℓ^{|m|}` in [`Normalization::SmallestIntegers`] form.
pub fn legendre_function(l: HalfInt, m: HalfInt) -> Result<LegendreFunction> {
    let pair = QuantumPair::new(l, m)?;
    Ok(legendre_for_pair(&pair))
}

pub fn legendre_for_pair(pair: &QuantumPair) -> LegendreFunction {
    let i = pair.degree();
    let seed = Rational::from_integer(degree_seed(i));
    let coeffs = series_coefficients(pair.m_abs(), i)
        .into_iter()
        .map(|a| a * &seed)
        .collect();
    LegendreFunction::from_coeffs(pair.m_abs(), coeffs, Normalization::SmallestIntegers)
        .expect("series coefficients satisfy the function invariants")
}

/// All valid pairs with `m ≥ 0` and `2ℓ ≤ two_l_max`, ordered by `2|m|` then `i`.
pub fn lattice(two_l_max: i64) -> Vec<QuantumPair> {
    let mut out = Vec::new();
    for two_m in 0..=two_l_max.max(-1) {
        for two_l in (two_m..=two_l_max).step_by(2) {
            out.push(QuantumPair::from_twice(two_l, two_m).expect("lattice point is valid"));
        }
    }
    out
}
