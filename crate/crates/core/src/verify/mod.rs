//! Independent oracles and property suites.
//!
//! The three-term recurrence in `ℓ` generates each `|m|` family without the
//! power series; the suites compare it, the exact ODE residual, the golden
//! tables, quadrature and the azimuthal periodicity against the series
//! construction and report per-case results.

pub mod golden;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{
    eval_phi, ode_residual_exact, ode_residual_numeric, quadrature_norm, QuasiHarmonic,
};
use crate::norms::{inner_product, norm_theta};
use crate::numerics::{HalfInt, PiScaled};
use crate::poly::Poly;
use crate::series::{
    lattice, legendre_for_pair, series_coefficients, LegendreFunction, Normalization, QuantumPair,
};
use crate::Rational;

/// Default upper bound on `2ℓ` for suites.
pub const DEFAULT_TWO_L_MAX: i64 = 25;

/// Largest `2|m|` and `i` covered by the golden tables.
pub const TABLE_TWO_M_MAX: i64 = 11;
pub const TABLE_I_MAX: usize = 5;

const PERIODICITY_SAMPLES: usize = 100;
const PERIODICITY_SEED: u64 = 0x5eed_4a11;
const PERIODICITY_TOL: f64 = 1e-12;
const MODULUS_TOL: f64 = 1e-15;
const QUADRATURE_NODES: usize = 4096;
const QUADRATURE_REL_TOL: f64 = 1e-9;
const FD_STEP: f64 = 1e-4;
const FD_REL_TOL: f64 = 1e-6;

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer coefficients `(ℓ−|m|+1, 2ℓ+1, ℓ+|m|)` of
/// `(ℓ−|m|+1)R_{ℓ+1} = (2ℓ+1)x·R_ℓ − (ℓ+|m|)R_{ℓ−1}`; `None` if any is not integral.
pub fn recurrence_coefficients(l: HalfInt, m_abs: HalfInt) -> Option<[i64; 3]> {
    let next = (l - m_abs + HalfInt::ONE).to_integer()?;
    let x = (l + l + HalfInt::ONE).to_integer()?;
    let prev = (l + m_abs).to_integer()?;
    Some([next, x, prev])
}

/// Family `R_{|m|}, R_{|m|+1}, …, R_{l_max}` from the three-term recurrence,
/// seeded with `R_{|m|} = 1` and `R_{|m|+1} = (2|m|+1)x`.
pub fn recurrence_family(m_abs: HalfInt, l_max: HalfInt) -> Result<Vec<LegendreFunction>> {
    let invalid = |reason| Error::InvalidPair {
        l: l_max,
        m: m_abs,
        reason,
    };
    if m_abs.twice() < 0 {
        return Err(invalid("|m| must be non-negative"));
    }
    QuantumPair::new(l_max, m_abs)?;
    let count = (l_max - m_abs)
        .to_integer()
        .ok_or_else(|| invalid("l_max not reachable from |m|"))? as usize
        + 1;

    let mut polys: Vec<Poly<Rational>> = vec![Poly::constant(Rational::one())];
    if count > 1 {
        polys.push(Poly::monomial(int(m_abs.twice() + 1), 1));
    }
    while polys.len() < count {
        let l = m_abs + HalfInt::from_int(polys.len() as i64 - 1);
        let [next, x, prev] = recurrence_coefficients(l, m_abs).ok_or_else(|| {
            Error::Malformed(format!("non-integral recurrence coefficient at l={l}"))
        })?;
        let n = polys.len();
        let xr = &Poly::monomial(int(x), 1) * &polys[n - 1];
        let pr = polys[n - 2].scale(&int(prev));
        polys.push((&xr - &pr).scale(&Rational::new(BigInt::one(), BigInt::from(next))));
    }
    polys
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let mut c = p.into_coeffs();
            c.resize(i + 1, Rational::zero());
            LegendreFunction::from_coeffs(m_abs, c, Normalization::RecurrenceSeeded)
        })
        .collect()
}

fn trimmed(v: &[Rational]) -> &[Rational] {
    let n = v.iter().rposition(|c| !c.is_zero()).map_or(0, |k| k + 1);
    &v[..n]
}

/// The unique `c` with `p = c·q`.
pub fn proportionality_check(p: &[Rational], q: &[Rational]) -> Result<Rational> {
    let (p, q) = (trimmed(p), trimmed(q));
    if p.is_empty() || q.is_empty() {
        return Err(Error::AllZero);
    }
    if p.len() != q.len() {
        return Err(Error::NotProportional);
    }
    let k = q.iter().position(|c| !c.is_zero()).expect("q is nonzero");
    let c = &p[k] / &q[k];
    if p.iter().zip(q).all(|(a, b)| *a == &c * b) {
        Ok(c)
    } else {
        Err(Error::NotProportional)
    }
}

/// Lower coefficients from `a_k = −(k+1)(k+2)/((i−k)(2|m|+i+k+1))·a_{k+2}`,
/// anchored at the leading coefficient `a_i`.
pub fn downward_coefficients(m_abs: HalfInt, i: usize, leading: &Rational) -> Vec<Rational> {
    let mut a = vec![Rational::zero(); i + 1];
    a[i] = leading.clone();
    let mut k = i;
    while k >= 2 {
        k -= 2;
        let num = int(((k + 1) * (k + 2)) as i64);
        let den = int((i - k) as i64) * int(m_abs.twice() + (i + k + 1) as i64);
        a[k] = -(num / den) * &a[k + 2];
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Tables,
    OdeExact,
    OdeNumeric,
    Recurrence,
    Orthogonality,
    Norms,
    Periodicity,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Tables,
        Suite::OdeExact,
        Suite::OdeNumeric,
        Suite::Recurrence,
        Suite::Orthogonality,
        Suite::Norms,
        Suite::Periodicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::OdeExact => "ode-exact",
            Suite::OdeNumeric => "ode-numeric",
            Suite::Recurrence => "recurrence",
            Suite::Orthogonality => "orthogonality",
            Suite::Norms => "norms",
            Suite::Periodicity => "periodicity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "suite name",
                input: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    pub residual: String,
}

impl Case {
    fn new(id: impl Into<String>, pass: bool, residual: impl Into<String>) -> Self {
        Case {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            residual: residual.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub two_l_max: i64,
    pub i_max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub bounds: Bounds,
    pub cases: Vec<Case>,
    pub pass_count: usize,
    pub fail_count: usize,
}

impl VerificationReport {
    fn new(suite: Suite, bounds: Bounds, cases: Vec<Case>) -> Self {
        let pass_count = cases.iter().filter(|c| c.status == Status::Pass).count();
        VerificationReport {
            suite,
            bounds,
            fail_count: cases.len() - pass_count,
            pass_count,
            cases,
        }
    }

    pub fn passed(&self) -> bool {
        self.fail_count == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite {} (2l <= {}, i <= {}): {} passed, {} failed\n",
            self.suite, self.bounds.two_l_max, self.bounds.i_max, self.pass_count, self.fail_count
        );
        for c in &self.cases {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{tag} {} {}\n", c.id, c.residual));
        }
        out
    }
}

fn case_id(two_m: i64, i: usize) -> String {
    format!("two_m={two_m} i={i}")
}

fn golden_function(two_m: i64, i: usize) -> Vec<Rational> {
    golden::LEGENDRE[two_m as usize][i]
        .iter()
        .map(|&c| int(c))
        .collect()
}

fn golden_norm(two_m: i64, i: usize) -> PiScaled {
    let (n, d, e) = golden::NORMS[two_m as usize][i];
    PiScaled::new(Rational::new(n.into(), d.into()), e).expect("golden π exponent is 0 or 1")
}

fn tables_suite(two_l_max: i64) -> Vec<Case> {
    let mut cases = Vec::new();
    for two_m in 0..=TABLE_TWO_M_MAX {
        for i in 0..=TABLE_I_MAX {
            let two_l = two_m + 2 * i as i64;
            if two_l > two_l_max {
                continue;
            }
            let pair = QuantumPair::from_twice(two_l, two_m).expect("table pair is valid");
            let f = legendre_for_pair(&pair);
            let want = golden_function(two_m, i);
            let ok = f.coeffs() == want.as_slice();
            cases.push(Case::new(
                format!("legendre {}", case_id(two_m, i)),
                ok,
                if ok {
                    "exact".to_string()
                } else {
                    format!("got {}, want {}", f.poly(), Poly::new(want))
                },
            ));
            let got = norm_theta(&f);
            let want = golden_norm(two_m, i);
            let ok = got == want;
            cases.push(Case::new(
                format!("norm {}", case_id(two_m, i)),
                ok,
                if ok {
                    "exact".to_string()
                } else {
                    format!("got {got}, want {want}")
                },
            ));
        }
    }
    cases
}

fn ode_exact_suite(two_l_max: i64) -> Vec<Case> {
    lattice(two_l_max)
        .iter()
        .map(|p| {
            let r = ode_residual_exact(&legendre_for_pair(p));
            Case::new(
                case_id(p.m().twice(), p.degree()),
                r.is_zero(),
                r.to_string(),
            )
        })
        .collect()
}

fn ode_numeric_suite(two_l_max: i64) -> Vec<Case> {
    use std::f64::consts::PI;
    let thetas = [PI / 4.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0, 3.0 * PI / 4.0];
    lattice(two_l_max)
        .into_iter()
        .map(|p| {
            let h = QuasiHarmonic::new(p);
            let f = h.theta_part();
            let a = f.eigenvalue().to_f64().unwrap_or(f64::NAN);
            let coeff_sum: f64 = f
                .coeffs()
                .iter()
                .map(|c| c.abs().to_f64().unwrap_or(f64::NAN))
                .sum();
            let scale = (1.0 + a) * coeff_sum;
            let worst = thetas
                .iter()
                .map(|&t| ode_residual_numeric(&h, t, FD_STEP).map(|r| r.abs() / scale))
                .try_fold(0.0f64, |acc, r| r.map(|r| acc.max(r)));
            match worst {
                Ok(w) => Case::new(
                    case_id(p.m().twice(), p.degree()),
                    w <= FD_REL_TOL,
                    format!("{w:.3e}"),
                ),
                Err(e) => Case::new(case_id(p.m().twice(), p.degree()), false, e.to_string()),
            }
        })
        .collect()
}

fn recurrence_suite(two_l_max: i64) -> Vec<Case> {
    let mut cases = Vec::new();
    for two_m in 0..=two_l_max {
        let m_abs = HalfInt::from_twice(two_m);
        let top = two_m + (two_l_max - two_m) / 2 * 2;
        let family = match recurrence_family(m_abs, HalfInt::from_twice(top)) {
            Ok(f) => f,
            Err(e) => {
                cases.push(Case::new(
                    format!("family two_m={two_m}"),
                    false,
                    e.to_string(),
                ));
                continue;
            }
        };
        for (i, r) in family.iter().enumerate() {
            let series = series_coefficients(m_abs, i);
            let down = downward_coefficients(m_abs, i, &series[i]);
            let (ok, residual) = match proportionality_check(r.coeffs(), &series) {
                Ok(c) if down == series => (true, format!("scale {c}")),
                Ok(_) => (false, "downward recursion disagrees".to_string()),
                Err(e) => (false, e.to_string()),
            };
            cases.push(Case::new(case_id(two_m, i), ok, residual));
        }
    }
    cases
}

fn orthogonality_suite(two_l_max: i64) -> Vec<Case> {
    let mut cases = Vec::new();
    for two_m in 0..=two_l_max {
        let fs: Vec<LegendreFunction> = lattice(two_l_max)
            .iter()
            .filter(|p| p.m().twice() == two_m)
            .map(legendre_for_pair)
            .collect();
        for (i, f) in fs.iter().enumerate() {
            for (j, g) in fs.iter().enumerate().skip(i + 1) {
                let v = inner_product(f, g);
                let ok = v.as_ref().is_ok_and(PiScaled::is_zero);
                let residual = match v {
                    Ok(v) => v.to_string(),
                    Err(e) => e.to_string(),
                };
                cases.push(Case::new(
                    format!("two_m={two_m} i={i} j={j}"),
                    ok,
                    residual,
                ));
            }
        }
    }
    cases
}

fn norms_suite(two_l_max: i64) -> Vec<Case> {
    lattice(two_l_max)
        .iter()
        .map(|p| {
            let f = legendre_for_pair(p);
            let exact = norm_theta(&f);
            let parity_ok = (exact.pi_exponent() == 1) == p.m().is_half_odd();
            let positive = exact.q().is_positive();
            let v: f64 = exact.to_real();
            let q: f64 = quadrature_norm(&f, QUADRATURE_NODES);
            let rel = ((q - v) / v).abs();
            let ok = parity_ok && positive && rel <= QUADRATURE_REL_TOL;
            Case::new(
                case_id(p.m().twice(), p.degree()),
                ok,
                format!("{exact} rel {rel:.3e}"),
            )
        })
        .collect()
}

fn periodicity_suite(two_l_max: i64) -> Vec<Case> {
    use std::f64::consts::PI;
    let mut rng = ChaCha8Rng::seed_from_u64(PERIODICITY_SEED);
    let phis: Vec<f64> = (0..PERIODICITY_SAMPLES)
        .map(|_| rng.gen_range(0.0..4.0 * PI))
        .collect();
    let mut cases = Vec::new();
    for two_m in -two_l_max..=two_l_max {
        let m = HalfInt::from_twice(two_m);
        // half-odd m flips sign after 2π; integer m is 2π-periodic
        let flip = if m.is_half_odd() { -1.0 } else { 1.0 };
        let mut worst: f64 = 0.0;
        let mut modulus: f64 = 0.0;
        for &phi in &phis {
            let z = eval_phi::<f64>(m, phi);
            worst = worst
                .max((eval_phi::<f64>(m, phi + 2.0 * PI) - z * flip).norm())
                .max((eval_phi::<f64>(m, phi + 4.0 * PI) - z).norm());
            modulus = modulus.max((z.norm() - 1.0).abs());
        }
        let ok = worst < PERIODICITY_TOL && modulus <= MODULUS_TOL;
        cases.push(Case::new(
            format!("two_m={two_m}"),
            ok,
            format!("shift {worst:.3e} modulus {modulus:.3e}"),
        ));
    }
    cases
}

/// Runs one suite over every valid `(ℓ, m)` with `2ℓ ≤ two_l_max`.
pub fn run_suite(suite: Suite, two_l_max: i64) -> VerificationReport {
    let two_l_max = two_l_max.max(0);
    let (cases, i_max) = match suite {
        Suite::Tables => (
            tables_suite(two_l_max),
            TABLE_I_MAX.min(two_l_max as usize / 2),
        ),
        Suite::OdeExact => (ode_exact_suite(two_l_max), two_l_max as usize / 2),
        Suite::OdeNumeric => (ode_numeric_suite(two_l_max), two_l_max as usize / 2),
        Suite::Recurrence => (recurrence_suite(two_l_max), two_l_max as usize / 2),
        Suite::Orthogonality => (orthogonality_suite(two_l_max), two_l_max as usize / 2),
        Suite::Norms => (norms_suite(two_l_max), two_l_max as usize / 2),
        Suite::Periodicity => (periodicity_suite(two_l_max), 0),
    };
    VerificationReport::new(suite, Bounds { two_l_max, i_max }, cases)
}
