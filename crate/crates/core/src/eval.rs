//! Floating-point evaluation of `Θ(θ)`, `Φ(φ)` and `Y(θ, φ) = Θ(θ)·Φ(φ)`,
//! plus ODE residual and quadrature cross-checks.
//!
//! Exact values are converted to floats only here. All quadrature runs in θ,
//! where the integrand `sin^{2|m|+1}θ · P′(cos θ)²` is smooth for both integer
//! and half-odd-integer `|m|`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::norms::{norm_theta, PhiRange};
use crate::numerics::{parse_rational, to_real, HalfInt, PiScaled, Real};
use crate::poly::Poly;
use crate::series::{eigenvalue, legendre_for_pair, LegendreFunction, Normalization, QuantumPair};
use crate::Rational;

/// `Y_ℓ^m` with its `θ` factor and (optionally) its exact `N²_θ`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiHarmonic {
    pair: QuantumPair,
    theta_part: LegendreFunction,
    norm: Option<PiScaled>,
    phi_range: PhiRange,
}

impl QuasiHarmonic {
    /// Table-normalized `θ` factor with its exact `N²_θ` attached.
    pub fn new(pair: QuantumPair) -> Self {
        let theta_part = legendre_for_pair(&pair);
        let norm = Some(norm_theta(&theta_part));
        QuasiHarmonic {
            pair,
            theta_part,
            norm,
            phi_range: PhiRange::TwoPi,
        }
    }

    pub fn from_parts(pair: QuantumPair, theta_part: LegendreFunction) -> Result<Self> {
        if theta_part.m_abs() != pair.m_abs() || theta_part.degree() != pair.degree() {
            return Err(Error::Malformed(format!(
                "θ factor (|m|={}, i={}) does not match {pair}",
                theta_part.m_abs(),
                theta_part.degree()
            )));
        }
        Ok(QuasiHarmonic {
            pair,
            theta_part,
            norm: None,
            phi_range: PhiRange::TwoPi,
        })
    }

    pub fn with_phi_range(mut self, range: PhiRange) -> Self {
        self.phi_range = range;
        self
    }

    pub fn pair(&self) -> &QuantumPair {
        &self.pair
    }

    pub fn theta_part(&self) -> &LegendreFunction {
        &self.theta_part
    }

    pub fn phi_range(&self) -> PhiRange {
        self.phi_range
    }

    pub fn norm_theta(&self) -> PiScaled {
        self.norm
            .clone()
            .unwrap_or_else(|| norm_theta(&self.theta_part))
    }

    /// Normalization of values returned by `eval_harmonic(.., unit_normalized)`.
    pub fn normalization(&self, unit_normalized: bool) -> Normalization {
        if unit_normalized {
            Normalization::UnitNorm
        } else {
            self.theta_part.normalization()
        }
    }

    /// `√(φ factor · N²_θ)`.
    pub fn unit_divisor<F: Real>(&self) -> F {
        let phi: F = self.phi_range.phi_factor(self.pair.m()).to_real();
        (phi * self.norm_theta().to_real::<F>()).sqrt()
    }
}

/// An angle in radians, or an exact rational multiple of π.
#[derive(Debug, Clone, PartialEq)]
pub enum Angle {
    Radians(f64),
    PiMultiple(Rational),
}

impl Angle {
    pub fn to_real<F: Real>(&self) -> F {
        match self {
            Angle::Radians(v) => F::from(*v).unwrap_or_else(F::nan),
            Angle::PiMultiple(r) => to_real::<F>(r) * F::PI(),
        }
    }

    /// `(cos, sin)`, exact at multiples of π/2.
    pub fn cos_sin<F: Real>(&self) -> (F, F) {
        match self {
            Angle::Radians(_) => {
                let t: F = self.to_real();
                (t.cos(), t.sin())
            }
            Angle::PiMultiple(r) => cos_sin_pi(r),
        }
    }
}

/// `(cos πr, sin πr)` with exact quarter turns.
fn cos_sin_pi<F: Real>(r: &Rational) -> (F, F) {
    let two = Rational::from_integer(BigInt::from(2));
    let mut t = r % &two;
    if t.is_negative() {
        t += &two;
    }
    let quarter = &t * Rational::from_integer(BigInt::from(2));
    if quarter.is_integer() {
        let (z, o) = (F::zero(), F::one());
        let q: BigInt = quarter.to_integer().mod_floor(&BigInt::from(4));
        return match q.to_string().as_str() {
            "0" => (o, z),
            "1" => (z, o),
            "2" => (-o, z),
            _ => (z, -o),
        };
    }
    let a = to_real::<F>(&t) * F::PI();
    (a.cos(), a.sin())
}

/// Accepts a float (`"0.25"`) or a multiple of π (`"pi"`, `"2pi"`, `"-pi/2"`, `"3pi/4"`).
impl FromStr for Angle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(pos) = t.find("pi") {
            let err = || Error::Parse {
                what: "angle",
                input: s.to_string(),
            };
            let coef = t[..pos].trim().trim_end_matches('*');
            let coef = match coef {
                "" | "+" => Rational::one(),
                "-" => -Rational::one(),
                c => parse_rational(c).map_err(|_| err())?,
            };
            let rest = t[pos + 2..].trim();
            let div = match rest.strip_prefix('/') {
                Some(d) => parse_rational(d).map_err(|_| err())?,
                None if rest.is_empty() => Rational::one(),
                None => return Err(err()),
            };
            if div.is_zero() {
                return Err(err());
            }
            return Ok(Angle::PiMultiple(coef / div));
        }
        t.parse::<f64>()
            .map(Angle::Radians)
            .map_err(|_| Error::Parse {
                what: "angle",
                input: s.to_string(),
            })
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Radians(v) => write!(f, "{v}"),
            Angle::PiMultiple(r) => write!(f, "({r})pi"),
        }
    }
}

fn theta_from_cos_sin<F: Real>(f: &LegendreFunction, c: F, s: F) -> F {
    let p: Poly<F> = f.poly().map(to_real::<F>);
    let s = s.max(F::zero());
    let e = f.m_abs().to_real::<F>();
    let factor = if e.is_zero() { F::one() } else { s.powf(e) };
    factor * p.eval(&c)
}

fn check_theta<F: Real>(theta: F) -> Result<()> {
    if theta >= F::zero() && theta <= F::PI() {
        Ok(())
    } else {
        Err(Error::Domain(format!("θ = {theta} is outside [0, π]")))
    }
}

/// `(sin θ)^{|m|} · P′(cos θ)` for `θ ∈ [0, π]`.
pub fn eval_theta<F: Real>(f: &LegendreFunction, theta: F) -> Result<F> {
    check_theta(theta)?;
    Ok(theta_from_cos_sin(f, theta.cos(), theta.sin()))
}

/// Period of `exp(i m φ)`: 2π for integer `m`, 4π otherwise.
pub fn phi_period<F: Real>(m: HalfInt) -> F {
    let two = F::one() + F::one();
    if m.is_half_odd() {
        two * two * F::PI()
    } else {
        two * F::PI()
    }
}

/// `exp(i m φ)`, with φ first reduced modulo the period.
pub fn eval_phi<F: Real>(m: HalfInt, phi: F) -> Complex<F> {
    let period = phi_period::<F>(m);
    let mut r = phi % period;
    if r < F::zero() {
        r = r + period;
    }
    if r >= period {
        r = F::zero();
    }
    let t = m.to_real::<F>() * r;
    Complex::new(t.cos(), t.sin())
}

fn eval_phi_angle<F: Real>(m: HalfInt, phi: &Angle) -> Complex<F> {
    match phi {
        Angle::Radians(_) => eval_phi(m, phi.to_real::<F>()),
        Angle::PiMultiple(r) => {
            let (c, s) = cos_sin_pi::<F>(&(m.to_rational() * r));
            Complex::new(c, s)
        }
    }
}

/// `Θ(θ)·Φ(φ)`, divided by `√(φ factor · N²_θ)` when `unit_normalized`.
pub fn eval_harmonic<F: Real>(
    h: &QuasiHarmonic,
    theta: F,
    phi: F,
    unit_normalized: bool,
) -> Result<Complex<F>> {
    let theta_val = eval_theta(&h.theta_part, theta)?;
    let y = eval_phi(h.pair.m(), phi) * theta_val;
    Ok(if unit_normalized {
        y / h.unit_divisor::<F>()
    } else {
        y
    })
}

/// As [`eval_harmonic`], taking [`Angle`]s so exact multiples of π stay exact.
pub fn eval_harmonic_at<F: Real>(
    h: &QuasiHarmonic,
    theta: &Angle,
    phi: &Angle,
    unit_normalized: bool,
) -> Result<Complex<F>> {
    let theta_val = match theta {
        Angle::Radians(_) => eval_theta(&h.theta_part, theta.to_real::<F>())?,
        Angle::PiMultiple(r) => {
            if r.is_negative() || r > &Rational::one() {
                return Err(Error::Domain(format!("θ = {theta} is outside [0, π]")));
            }
            let (c, s) = cos_sin_pi::<F>(r);
            theta_from_cos_sin(&h.theta_part, c, s)
        }
    };
    let y = eval_phi_angle::<F>(h.pair.m(), phi) * theta_val;
    Ok(if unit_normalized {
        y / h.unit_divisor::<F>()
    } else {
        y
    })
}

/// `(1−x²)P″ − 2(|m|+1)xP′ + [A − |m|(|m|+1)]P` for the polynomial factor,
/// with `A` the eigenvalue of the function's degree.
pub fn ode_residual_exact(f: &LegendreFunction) -> Poly<Rational> {
    let p = f.poly();
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let m = f.m_abs().to_rational();
    let one = Rational::one();
    let one_minus_x2 = Poly::new(vec![one.clone(), Rational::zero(), -one.clone()]);
    let drift = Poly::monomial(Rational::from_integer(BigInt::from(-2)) * (&m + &one), 1);
    let shift = eigenvalue(f.m_abs(), f.degree()) - &m * (&m + &one);
    let t1 = &one_minus_x2 * &d2;
    let t2 = &drift * &d1;
    &(&t1 + &t2) + &p.scale(&shift)
}

/// Central-difference residual of the θ equation
/// `(1/sin θ)(sin θ Θ′)′ + [A − m²/sin²θ]Θ`, using the raw (table-normalized) Θ.
///
/// Points within `10·step` of 0 or π are rejected.
pub fn ode_residual_numeric<F: Real>(h: &QuasiHarmonic, theta: F, step: F) -> Result<F> {
    let ten = F::from(10.0).unwrap_or_else(F::nan);
    let margin = ten * step;
    let inside = step > F::zero() && theta > margin && theta < F::PI() - margin;
    if !inside {
        return Err(Error::Domain(format!(
            "θ = {theta} is within the endpoint exclusion zone (step {step})"
        )));
    }
    let f = &h.theta_part;
    let at = |t: F| eval_theta(f, t);
    let (lo, mid, hi) = (at(theta - step)?, at(theta)?, at(theta + step)?);
    let two = F::one() + F::one();
    let d1 = (hi - lo) / (two * step);
    let d2 = (hi - two * mid + lo) / (step * step);
    let a: F = to_real(&f.eigenvalue());
    let m = h.pair.m().to_real::<F>();
    let s = theta.sin();
    Ok(d2 + theta.cos() / s * d1 + (a - m * m / (s * s)) * mid)
}

/// Composite Simpson approximation of `∫₀^π Θ(θ)² sin θ dθ` with `nodes`
/// subintervals (odd counts round up to the next even number).
pub fn quadrature_norm<F: Real>(f: &LegendreFunction, nodes: usize) -> F {
    let n = nodes.max(2).div_ceil(2) * 2;
    let p: Poly<F> = f.poly().map(to_real::<F>);
    let power = (f.m_abs().twice() + 1) as i32;
    let integrand = |t: F| {
        let v = p.eval(&t.cos());
        t.sin().max(F::zero()).powi(power) * v * v
    };
    let nf = F::from(n).unwrap_or_else(F::nan);
    let h = F::PI() / nf;
    let (two, four) = (F::from(2.0).unwrap(), F::from(4.0).unwrap());
    let mut sum = integrand(F::zero()) + integrand(F::PI());
    for j in 1..n {
        let t = F::from(j).unwrap_or_else(F::nan) * h;
        sum = sum + integrand(t) * if j % 2 == 1 { four } else { two };
    }
    sum * h / F::from(3.0).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::legendre_function;
    use std::f64::consts::PI;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn harmonic(two_l: i64, two_m: i64) -> QuasiHarmonic {
        QuasiHarmonic::new(QuantumPair::from_twice(two_l, two_m).unwrap())
    }

    fn lf(two_l: i64, two_m: i64) -> LegendreFunction {
        legendre_function(h(two_l), h(two_m)).unwrap()
    }

    #[test]
    fn eval_theta_examples() {
        assert!((eval_theta(&lf(1, 1), PI / 2.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(eval_theta(&lf(3, 3), 0.0).unwrap(), 0.0);
        assert!((eval_theta(&lf(2, 0), PI / 3.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(matches!(eval_theta(&lf(2, 0), -0.1), Err(Error::Domain(_))));
        assert!(matches!(eval_theta(&lf(2, 0), 3.2), Err(Error::Domain(_))));
        // f32 path
        let v: f32 = eval_theta(&lf(2, 0), std::f32::consts::FRAC_PI_3).unwrap();
        assert!((v - 0.5).abs() < 1e-6);
    }

    #[test]
    fn eval_phi_examples() {
        let z: Complex<f64> = eval_phi(h(0), 1.234);
        assert_eq!(z, Complex::new(1.0, 0.0));
        let z: Complex<f64> = eval_phi(h(1), 2.0 * PI);
        assert!((z - Complex::new(-1.0, 0.0)).norm() < 1e-15);
        let z: Complex<f64> = eval_phi(h(1), 4.0 * PI);
        assert!((z - Complex::new(1.0, 0.0)).norm() < 1e-15);
        let z: Complex<f64> = eval_phi(h(-3), -7.5);
        assert!((z.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eval_harmonic_examples() {
        let y = harmonic(1, 1);
        let v = eval_harmonic(&y, PI / 2.0, 0.0, false).unwrap();
        assert!((v - Complex::new(1.0, 0.0)).norm() < 1e-15);
        let v = eval_harmonic(&y, PI / 2.0, 2.0 * PI, false).unwrap();
        assert!((v - Complex::new(-1.0, 0.0)).norm() < 1e-15);
        let v = eval_harmonic(&harmonic(2, 0), 0.0, 0.77, false).unwrap();
        assert_eq!(v, Complex::new(1.0, 0.0));
        assert!(eval_harmonic(&y, 4.0, 0.0, false).is_err());
    }

    #[test]
    fn exact_angles() {
        let y = harmonic(1, 1);
        let half: Angle = "pi/2".parse().unwrap();
        let two_pi: Angle = "2pi".parse().unwrap();
        let v: Complex<f64> = eval_harmonic_at(&y, &half, &two_pi, false).unwrap();
        assert_eq!(v, Complex::new(-1.0, 0.0));
        assert!(eval_harmonic_at::<f64>(&y, &"3pi/2".parse().unwrap(), &two_pi, false).is_err());
        assert_eq!(
            "-3pi/4".parse::<Angle>().unwrap(),
            Angle::PiMultiple(Rational::new((-3).into(), 4.into()))
        );
        assert_eq!("0.5".parse::<Angle>().unwrap(), Angle::Radians(0.5));
        assert_eq!(
            "pi".parse::<Angle>().unwrap(),
            Angle::PiMultiple(Rational::one())
        );
        assert!("2pix".parse::<Angle>().is_err());
        assert!("pi/0".parse::<Angle>().is_err());
        // exact and float paths agree off the quarter lattice
        let t: Angle = "pi/3".parse().unwrap();
        let p: Angle = "5pi/7".parse().unwrap();
        let y = harmonic(7, -3);
        let a: Complex<f64> = eval_harmonic_at(&y, &t, &p, true).unwrap();
        let b = eval_harmonic(&y, PI / 3.0, 5.0 * PI / 7.0, true).unwrap();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn unit_normalization_divisor() {
        let y = harmonic(1, 1);
        // N² = 2π · π/2 = π²
        assert!((y.unit_divisor::<f64>() - PI).abs() < 1e-14);
        assert_eq!(y.normalization(true), Normalization::UnitNorm);
        let y4 = y.clone().with_phi_range(PhiRange::FourPi);
        assert!((y4.unit_divisor::<f64>() - PI * 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn from_parts_validates() {
        let pair = QuantumPair::from_twice(5, 1).unwrap();
        assert!(QuasiHarmonic::from_parts(pair, lf(3, 1)).is_err());
        let y = QuasiHarmonic::from_parts(pair, lf(5, 1)).unwrap();
        assert_eq!(y.norm_theta(), norm_theta(&lf(5, 1)));
    }

    #[test]
    fn ode_residual_exact_examples() {
        assert!(ode_residual_exact(&lf(5, 1)).is_zero());
        assert!(ode_residual_exact(&lf(0, 0)).is_zero());
        let bad = LegendreFunction::from_coeffs(
            h(1),
            vec![
                Rational::one(),
                Rational::zero(),
                Rational::from_integer((-5).into()),
            ],
            Normalization::SmallestIntegers,
        )
        .unwrap();
        // A − |m|(|m|+1) = 35/4 − 3/4 = 8;  P = 1 − 5x²
        // (1−x²)(−10) − 3x(−10x) + 8(1 − 5x²) = −2
        let res = ode_residual_exact(&bad);
        assert_eq!(res, Poly::constant(Rational::from_integer((-2).into())));
    }

    #[test]
    fn ode_residual_numeric_examples() {
        let r = ode_residual_numeric(&harmonic(2, 0), 1.0, 1e-4).unwrap();
        assert!(r.abs() < 1e-6, "{r}");
        let r = ode_residual_numeric(&harmonic(3, 1), PI / 2.0, 1e-4).unwrap();
        assert!(r.abs() < 1e-6, "{r}");
        assert!(matches!(
            ode_residual_numeric(&harmonic(1, 1), 1e-9, 1e-4),
            Err(Error::Domain(_))
        ));
        assert!(ode_residual_numeric(&harmonic(1, 1), PI - 5e-4, 1e-4).is_err());
    }

    #[test]
    fn quadrature_norm_examples() {
        assert!((quadrature_norm::<f64>(&lf(0, 0), 2048) - 2.0).abs() < 1e-10);
        assert!((quadrature_norm::<f64>(&lf(1, 1), 2048) - PI / 2.0).abs() < 1e-10);
        let exact = 231.0 * PI / 1024.0;
        assert!((quadrature_norm::<f64>(&lf(11, 11), 4096) - exact).abs() < 1e-9);
        // odd node counts round up
        assert_eq!(
            quadrature_norm::<f64>(&lf(4, 0), 17),
            quadrature_norm::<f64>(&lf(4, 0), 18)
        );
    }

    #[test]
    fn reflection_and_conjugation() {
        for p in crate::series::lattice(13) {
            let y = QuasiHarmonic::new(p);
            let f = y.theta_part();
            let sign = if f.degree().is_multiple_of(2) {
                1.0
            } else {
                -1.0
            };
            for t in [0.1, 0.7, 1.3, 1.5] {
                let a = eval_theta(f, t).unwrap();
                let b = eval_theta(f, PI - t).unwrap();
                assert!((b - sign * a).abs() < 1e-12 * (1.0 + a.abs()), "{p} θ={t}");
            }
            let neg = QuasiHarmonic::new(QuantumPair::new(p.l(), -p.m()).unwrap());
            let a = eval_harmonic(&y, 0.9, 2.3, true).unwrap();
            let b = eval_harmonic(&neg, 0.9, 2.3, true).unwrap();
            assert!((a - b.conj()).norm() < 1e-12, "{p}");
        }
    }
}
