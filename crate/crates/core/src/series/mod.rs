//! Truncated formal power series with exact rational coefficients, and the
//! solvers used to pin down series defined by functional equations.

mod fixed_point;
mod power_series;

pub use fixed_point::{solve_fixed_point, FixedPointSolution, UpdateRule};
pub use power_series::{poly_residual, PowerSeries};

use num_bigint::BigInt;
use thiserror::Error;

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `numer / denom`.
///
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("{op} needs a zero constant term")]
    NonzeroConstantTerm { op: &'static str },
    #[error("{op} needs a nonzero constant term")]
    ZeroConstantTerm { op: &'static str },
    #[error("{op} needs constant term 1")]
    ConstantTermNotOne { op: &'static str },
    #[error("cannot divide by z^{shift}: coefficient of z^{degree} is nonzero")]
    NotDivisible { shift: usize, degree: usize },
    #[error("fixed-point iteration still moving after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("system has {unknowns} unknowns but a rule targets index {target}")]
    BadRuleTarget { unknowns: usize, target: usize },
}
