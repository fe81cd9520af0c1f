//! Exact scalar foundations.
//!
//! Quantum numbers are [`HalfInt`]s stored as their doubled value, series
//! coefficients are arbitrary-precision [`Rational`]s, and normalization
//! integrals are [`PiScaled`] values `q·π^e` with `e ∈ {0, 1}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{FloatConst, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Rational;

/// Floating-point scalar used at evaluation boundaries (`f32` or `f64`).
pub trait Real: num_traits::Float + FloatConst + fmt::Debug + fmt::Display + Send + Sync {}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an exact rational to the nearest representable `F`.
pub fn to_real<F: Real>(r: &Rational) -> F {
    let v = r.to_f64().unwrap_or(f64::NAN);
    F::from(v).unwrap_or_else(F::nan)
}

/// Integer or half-odd-integer, stored as twice its value.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.abs(),
        }
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_half_odd(self) -> bool {
        self.twice % 2 != 0
    }

    /// The integer value, if this is an integer.
    pub const fn to_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.twice), BigInt::from(2))
    }

    pub fn to_real<F: Real>(self) -> F {
        F::from(self.twice).unwrap_or_else(F::nan) / (F::one() + F::one())
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

/// Parses `"3"`, `"-1/2"`, `"6/4"`; anything whose double is an integer.
impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "half-integer",
            input: s.to_string(),
        };
        let r = parse_rational(s).map_err(|_| err())?;
        let doubled = r * Rational::from_integer(BigInt::from(2));
        if !doubled.is_integer() {
            return Err(err());
        }
        doubled
            .to_integer()
            .to_i64()
            .map(HalfInt::from_twice)
            .ok_or_else(err)
    }
}

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Serde adapters that encode rationals as `"num/den"` strings.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(
            v: &[Rational],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&r.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Rational>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

/// Exact value `q·π^e` with `e ∈ {0, 1}`.
///
/// Zero is always stored with `e = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PiScaledRepr", into = "PiScaledRepr")]
pub struct PiScaled {
    q: Rational,
    pi_exponent: u8,
}

#[derive(Serialize, Deserialize)]
struct PiScaledRepr {
    #[serde(with = "rational_str")]
    q: Rational,
    pi: u8,
}

impl From<PiScaled> for PiScaledRepr {
    fn from(v: PiScaled) -> Self {
        PiScaledRepr {
            q: v.q,
            pi: v.pi_exponent,
        }
    }
}

impl TryFrom<PiScaledRepr> for PiScaled {
    type Error = Error;
    fn try_from(r: PiScaledRepr) -> Result<Self> {
        PiScaled::new(r.q, r.pi)
    }
}

impl PiScaled {
    pub fn new(q: Rational, pi_exponent: u8) -> Result<Self> {
        if pi_exponent > 1 {
            return Err(Error::Parse {
                what: "pi exponent",
                input: pi_exponent.to_string(),
            });
        }
        Ok(Self::canonical(q, pi_exponent))
    }

    fn canonical(q: Rational, pi_exponent: u8) -> Self {
        let pi_exponent = if q.is_zero() { 0 } else { pi_exponent };
        PiScaled { q, pi_exponent }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn rational(q: Rational) -> Self {
        Self::canonical(q, 0)
    }

    /// `q·π`.
    pub fn pi_times(q: Rational) -> Self {
        Self::canonical(q, 1)
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn pi_exponent(&self) -> u8 {
        self.pi_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn checked_add(&self, other: &PiScaled) -> Result<PiScaled> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_exponent != other.pi_exponent {
            return Err(Error::MixedPiDegree(self.pi_exponent, other.pi_exponent));
        }
        Ok(Self::canonical(&self.q + &other.q, self.pi_exponent))
    }

    pub fn mul_rat(&self, r: &Rational) -> PiScaled {
        Self::canonical(&self.q * r, self.pi_exponent)
    }

    pub fn to_real<F: Real>(&self) -> F {
        let q: F = to_real(&self.q);
        if self.pi_exponent == 1 {
            q * F::PI()
        } else {
            q
        }
    }

    /// Sign of the value (π > 0).
    pub fn signum(&self) -> Ordering {
        if self.q.is_positive() {
            Ordering::Greater
        } else if self.q.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    /// LaTeX form as used in normalization tables, e.g. `\frac{9\pi}{32}`.
    pub fn to_latex(&self) -> String {
        let sign = if self.q.is_negative() { "-" } else { "" };
        let num = self.q.numer().abs();
        let den = self.q.denom();
        let top = match (self.pi_exponent, num.is_one()) {
            (1, true) => "\\pi".to_string(),
            (1, false) => format!("{num}\\pi"),
            _ => num.to_string(),
        };
        format!("{sign}\\frac{{{top}}}{{{den}}}")
    }
}

/// Plain-text form: `9π/32`, `π/2`, `8/3`, `2`, `-π`.
impl fmt::Display for PiScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_exponent == 0 {
            return write!(f, "{}", self.q);
        }
        let sign = if self.q.is_negative() { "-" } else { "" };
        let num = self.q.numer().abs();
        let den = self.q.denom();
        write!(f, "{sign}")?;
        if !num.is_one() {
            write!(f, "{num}")?;
        }
        write!(f, "π")?;
        if !den.is_one() {
            write!(f, "/{den}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn halfint_from_twice() {
        assert_eq!(HalfInt::from_twice(3).to_rational(), rat(3, 2));
        assert_eq!(HalfInt::from_twice(0).to_rational(), rat(0, 1));
        assert_eq!(HalfInt::from_twice(-1).to_rational(), rat(-1, 2));
        assert!(HalfInt::from_twice(3).is_half_odd());
        assert!(HalfInt::from_twice(-4).is_integer());
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::from_twice(6).to_string(), "3");
    }

    #[test]
    fn halfint_parse() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert_eq!("-4".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-8));
        assert_eq!("6/4".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("1.5".parse::<HalfInt>().is_err());
    }

    #[test]
    fn pi_scaled_add_examples() {
        let half_pi = PiScaled::pi_times(rat(1, 2));
        let sum = half_pi
            .checked_add(&PiScaled::pi_times(rat(-1, 2)))
            .unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.pi_exponent(), 0);
        assert_eq!(sum, PiScaled::zero());

        let sum = PiScaled::rational(rat(2, 1))
            .checked_add(&PiScaled::rational(rat(2, 3)))
            .unwrap();
        assert_eq!(sum, PiScaled::rational(rat(8, 3)));

        let err = half_pi.checked_add(&PiScaled::rational(rat(1, 3)));
        assert_eq!(err, Err(Error::MixedPiDegree(1, 0)));

        // zero absorbs regardless of exponent
        assert_eq!(half_pi.checked_add(&PiScaled::zero()).unwrap(), half_pi);
    }

    #[test]
    fn pi_scaled_mul_rat_examples() {
        let v = PiScaled::pi_times(rat(1, 8)).mul_rat(&rat(4, 1));
        assert_eq!(v, PiScaled::pi_times(rat(1, 2)));
        let v = PiScaled::rational(rat(2, 3)).mul_rat(&rat(0, 1));
        assert_eq!(v, PiScaled::zero());
        assert_eq!(v.pi_exponent(), 0);
        let v = PiScaled::pi_times(rat(1, 2)).mul_rat(&rat(1, 4));
        assert_eq!(v, PiScaled::pi_times(rat(1, 8)));
    }

    #[test]
    fn pi_scaled_display_and_latex() {
        assert_eq!(PiScaled::pi_times(rat(9, 32)).to_string(), "9π/32");
        assert_eq!(PiScaled::pi_times(rat(1, 2)).to_string(), "π/2");
        assert_eq!(PiScaled::pi_times(rat(-3, 1)).to_string(), "-3π");
        assert_eq!(PiScaled::rational(rat(8, 3)).to_string(), "8/3");
        assert_eq!(
            PiScaled::pi_times(rat(9, 32)).to_latex(),
            "\\frac{9\\pi}{32}"
        );
        assert_eq!(PiScaled::pi_times(rat(1, 2)).to_latex(), "\\frac{\\pi}{2}");
        assert_eq!(PiScaled::rational(rat(2, 1)).to_latex(), "\\frac{2}{1}");
    }

    #[test]
    fn pi_scaled_json_shape() {
        let v = PiScaled::pi_times(rat(9, 32));
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"q":"9/32","pi":1}"#);
        let back: PiScaled = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<PiScaled>(r#"{"q":"1","pi":2}"#).is_err());
        // zero with pi = 1 canonicalizes
        let z: PiScaled = serde_json::from_str(r#"{"q":"0/5","pi":1}"#).unwrap();
        assert_eq!(z.pi_exponent(), 0);
    }

    #[test]
    fn to_real_values() {
        let v: f64 = PiScaled::pi_times(rat(1, 2)).to_real();
        assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let v: f32 = PiScaled::rational(rat(2, 3)).to_real();
        assert!((v - 2.0 / 3.0).abs() < 1e-7);
    }

    fn small_pi_scaled() -> impl Strategy<Value = PiScaled> {
        (-50i64..50, 1i64..40, 0u8..2).prop_map(|(n, d, e)| PiScaled::new(rat(n, d), e).unwrap())
    }

    proptest! {
        #[test]
        fn halfint_add_and_order(a in -1000i64..1000, b in -1000i64..1000) {
            let (x, y) = (HalfInt::from_twice(a), HalfInt::from_twice(b));
            prop_assert_eq!((x + y).twice(), a + b);
            prop_assert_eq!(x.cmp(&y), x.to_rational().cmp(&y.to_rational()));
        }

        #[test]
        fn rational_reciprocal_is_one(a in 1i64..100_000, b in 1i64..100_000, neg: bool) {
            let a = if neg { -a } else { a };
            let r = rat(a, b);
            let product = &r * &rat(b, a);
            prop_assert!(product.is_one());
            prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one());
            prop_assert!(r.denom().is_positive());
        }

        #[test]
        fn pi_scaled_add_laws(a in small_pi_scaled(), b in small_pi_scaled(), c in small_pi_scaled()) {
            let ab = a.checked_add(&b);
            let ba = b.checked_add(&a);
            prop_assert_eq!(ab.is_ok(), ba.is_ok());
            if let (Ok(ab), Ok(ba)) = (&ab, &ba) {
                prop_assert_eq!(ab, ba);
            }
            if let (Ok(ab), Ok(bc)) = (a.checked_add(&b), b.checked_add(&c)) {
                if let (Ok(l), Ok(r)) = (ab.checked_add(&c), a.checked_add(&bc)) {
                    prop_assert_eq!(l, r);
                }
            }
            prop_assert_eq!(a.checked_add(&PiScaled::zero()).unwrap(), a.clone());
        }
    }
}
