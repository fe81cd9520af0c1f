//! Exact associated Legendre functions `P_ℓ^{|m|}` and quasi-spherical
//! harmonics `Y_ℓ^m(θ, φ)` for integer and half-odd-integer `ℓ`, `m`.
//!
//! Construction and normalization are done in exact rational arithmetic
//! ([`series`], [`norms`]); floating point enters only in [`eval`], which is
//! generic over [`Real`] (`f32` or `f64`).

pub mod error;
pub mod eval;
pub mod norms;
pub mod numerics;
pub mod poly;
pub mod series;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use eval::{
    eval_harmonic, eval_harmonic_at, eval_phi, eval_theta, ode_residual_exact,
    ode_residual_numeric, quadrature_norm, Angle, QuasiHarmonic,
};
pub use norms::{beta_moment, inner_product, norm_full, norm_theta, FullNorm, PhiRange};
pub use numerics::{HalfInt, PiScaled, Real};
pub use poly::Poly;
pub use series::{
    build_system, degree_seed, eigenvalue, legendre_function, normalize_smallest_integers,
    series_coefficients, LegendreFunction, Normalization, QuantumPair, TridiagonalSystem,
};
pub use verify::{run_suite, Suite, VerificationReport};

/// Exact coefficient scalar.
pub type Rational = num_rational::BigRational;
/// Polynomial with exact rational coefficients.
pub type RationalPoly = Poly<Rational>;
/// Polynomial with `f64` coefficients.
pub type Poly64 = Poly<f64>;
/// Complex value returned by `f64` evaluation.
pub type Complex64 = num_complex::Complex<f64>;
/// Complex value returned by `f32` evaluation.
pub type Complex32 = num_complex::Complex<f32>;
