//! Exact normalization and overlap integrals.
//!
//! Every integral reduces to even moments
//! `M(|m|, k) = ∫₋₁⁺¹ x^{2k} (1−x²)^{|m|} dx`, which are rational for integer
//! `|m|` and rational·π for half-odd-integer `|m|`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{HalfInt, PiScaled};
use crate::series::LegendreFunction;
use crate::Rational;

/// Key of the moment memo table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MomentKey {
    pub m_abs: HalfInt,
    pub k: usize,
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn moments() -> &'static RwLock<HashMap<MomentKey, PiScaled>> {
    static MOMENTS: OnceLock<RwLock<HashMap<MomentKey, PiScaled>>> = OnceLock::new();
    MOMENTS.get_or_init(Default::default)
}

fn compute_moment(key: MomentKey) -> PiScaled {
    let two_m = key.m_abs.twice();
    // M(m, 0): climb from M(0, 0) = 2 or M(1/2, 0) = π/2 in unit steps of |m|
    let (mut base, mut twice) = if two_m % 2 == 0 {
        (PiScaled::rational(frac(2, 1)), 0)
    } else {
        (PiScaled::pi_times(frac(1, 2)), 1)
    };
    while twice < two_m {
        twice += 2;
        base = base.mul_rat(&frac(twice, twice + 1));
    }
    // M(m, k) = M(m, k−1)·(2k−1)/(2|m|+2k+1)
    for k in 1..=key.k as i64 {
        base = base.mul_rat(&frac(2 * k - 1, two_m + 2 * k + 1));
    }
    base
}

/// `∫₋₁⁺¹ x^{2k} (1−x²)^{|m|} dx`, exact.
pub fn beta_moment(m_abs: HalfInt, k: usize) -> PiScaled {
    assert!(m_abs.twice() >= 0, "|m| must be non-negative");
    let key = MomentKey { m_abs, k };
    if let Some(v) = moments().read().ok().and_then(|t| t.get(&key).cloned()) {
        return v;
    }
    let v = compute_moment(key);
    if let Ok(mut t) = moments().write() {
        t.insert(key, v.clone());
    }
    v
}

fn weighted_integral(m_abs: HalfInt, coeffs: &[Rational]) -> PiScaled {
    coeffs
        .iter()
        .enumerate()
        .filter(|(j, _)| j % 2 == 0)
        .fold(PiScaled::zero(), |acc, (j, c)| {
            acc.checked_add(&beta_moment(m_abs, j / 2).mul_rat(c))
                .expect("moments at fixed |m| share one π degree")
        })
}

/// `N²_θ = ∫₋₁⁺¹ P(x)² dx`.
pub fn norm_theta(f: &LegendreFunction) -> PiScaled {
    let p = f.poly();
    weighted_integral(f.m_abs(), (&p * &p).coeffs())
}

/// `∫₋₁⁺¹ f(x) g(x) dx` for two functions with the same `|m|`.
pub fn inner_product(f: &LegendreFunction, g: &LegendreFunction) -> Result<PiScaled> {
    if f.m_abs() != g.m_abs() {
        return Err(Error::MixedM(f.m_abs(), g.m_abs()));
    }
    Ok(weighted_integral(
        f.m_abs(),
        (&f.poly() * &g.poly()).coeffs(),
    ))
}

/// Integration range of the azimuthal factor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PhiRange {
    #[default]
    #[serde(rename = "2pi")]
    TwoPi,
    /// Double-sphere range; only differs from `TwoPi` for half-odd-integer `m`.
    #[serde(rename = "4pi")]
    FourPi,
}

impl PhiRange {
    /// `∫|Φ|² dφ` over this range for the given `m`.
    pub fn phi_factor(self, m: HalfInt) -> PiScaled {
        match self {
            PhiRange::FourPi if m.is_half_odd() => PiScaled::pi_times(frac(4, 1)),
            _ => PiScaled::pi_times(frac(2, 1)),
        }
    }
}

impl FromStr for PhiRange {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2pi" => Ok(PhiRange::TwoPi),
            "4pi" => Ok(PhiRange::FourPi),
            _ => Err(Error::Parse {
                what: "phi range (2pi|4pi)",
                input: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for PhiRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PhiRange::TwoPi => "2pi",
            PhiRange::FourPi => "4pi",
        })
    }
}

/// `N² = phi_factor · theta_factor`, kept as two factors since their product
/// is a multiple of π² for half-odd-integer `|m|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullNorm {
    pub phi_factor: PiScaled,
    pub theta_factor: PiScaled,
}

impl FullNorm {
    pub fn to_real<F: crate::Real>(&self) -> F {
        self.phi_factor.to_real::<F>() * self.theta_factor.to_real::<F>()
    }
}

pub fn norm_full(f: &LegendreFunction, range: PhiRange) -> FullNorm {
    FullNorm {
        phi_factor: range.phi_factor(f.m_abs()),
        theta_factor: norm_theta(f),
    }
}
