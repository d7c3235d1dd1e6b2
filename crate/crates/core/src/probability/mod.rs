//! Limiting probabilities in the critical window: the distribution of the
//! kernel size and the probability that the random graph lies in a class
//! whose cubic kernels are counted by a [`KernelWeightTable`].
//!
//! Both come from one sum: the weight of kernels on `2r` vertices times
//! `sqrt(2 pi) A(3r + 1/2, lambda)`.

mod curve;

pub use curve::{
    parse_grid, probability_curve, probability_curve_with, read_curve_csv, CurvePoint,
    ProbabilityCurve,
};

use std::f64::consts::PI;

use num_bigint::BigInt;
use thiserror::Error;

use crate::airy::{airy_a, AiryError, Scaled};
use crate::enumeration::{all_cubic_weight, KernelWeightTable};
use crate::series::{rat, Rational};

pub const DEFAULT_TOL: f64 = 1e-10;
/// Relative accuracy requested from each Airy evaluation.
pub const AIRY_TOL: f64 = 1e-13;
pub const MIN_PMF_R_MAX: usize = 5;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProbabilityError {
    #[error("r_max must be at least {MIN_PMF_R_MAX}, got {0}")]
    RMaxTooSmall(usize),
    #[error("invalid lambda grid: {0}")]
    InvalidGrid(String),
    #[error("csv line {line}: {reason}")]
    Csv { line: usize, reason: String },
    #[error(transparent)]
    Airy(#[from] AiryError),
}

/// `sqrt(2 pi) * weight * A(3r + 1/2, lambda)` and a bound on its absolute
/// error.
pub fn kernel_term(weight: &Rational, r: usize, lambda: f64) -> Result<(f64, f64), AiryError> {
    let a = airy_a(3.0 * r as f64 + 0.5, lambda, AIRY_TOL)?;
    let value = (Scaled::from_rational(weight) * a.scaled * Scaled::from_f64((2.0 * PI).sqrt())).to_f64();
    let err = value.abs() * (a.relative_error + 8.0 * f64::EPSILON);
    Ok((value, err))
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelSizePmf {
    pub lambda: f64,
    /// `entries[r]` is the limiting probability that the kernel has `2r`
    /// vertices (`r = 0`: no complex component).
    pub entries: Vec<f64>,
    /// `max(0, 1 - sum of entries)`.
    pub tail_mass_bound: f64,
    /// Geometric extrapolation of the omitted terms from the last ratio;
    /// infinite when the computed terms are not yet decaying.
    pub decay_tail_estimate: f64,
}

impl KernelSizePmf {
    pub fn total(&self) -> f64 {
        self.entries.iter().sum()
    }

    pub fn r_max(&self) -> usize {
        self.entries.len() - 1
    }
}

pub fn kernel_size_pmf(lambda: f64, r_max: usize) -> Result<KernelSizePmf, ProbabilityError> {
    if r_max < MIN_PMF_R_MAX {
        return Err(ProbabilityError::RMaxTooSmall(r_max));
    }
    let entries = (0..=r_max)
        .map(|r| kernel_term(&all_cubic_weight(r as u64), r, lambda).map(|(v, _)| v))
        .collect::<Result<Vec<_>, _>>()?;
    let total: f64 = entries.iter().sum();
    Ok(KernelSizePmf {
        lambda,
        tail_mass_bound: (1.0 - total).max(0.0),
        decay_tail_estimate: geometric_tail(&entries),
        entries,
    })
}

/// `t * q / (1 - q)` with `q` the last term ratio, or infinity if `q >= 1`.
fn geometric_tail(terms: &[f64]) -> f64 {
    let n = terms.len();
    if n < 2 {
        return f64::INFINITY;
    }
    let (prev, last) = (terms[n - 2], terms[n - 1]);
    if last == 0.0 {
        return 0.0;
    }
    let q = last / prev;
    if prev > 0.0 && q < 1.0 {
        last * q / (1.0 - q)
    } else {
        f64::INFINITY
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassProbability {
    pub p: f64,
    /// Extrapolated truncation tail plus the accumulated evaluation error.
    pub error_bound: f64,
    /// True when the last three terms decrease, the last is below
    /// `tol * p`, and the table is not marked as truncated.
    pub certified: bool,
    pub terms: Vec<f64>,
}

pub fn class_probability(
    table: &KernelWeightTable,
    lambda: f64,
) -> Result<ClassProbability, ProbabilityError> {
    class_probability_with(table, lambda, DEFAULT_TOL)
}

pub fn class_probability_with(
    table: &KernelWeightTable,
    lambda: f64,
    tol: f64,
) -> Result<ClassProbability, ProbabilityError> {
    let mut terms = Vec::with_capacity(table.weights().len());
    let mut eval_err = 0.0;
    for (r, h) in table.weights().iter().enumerate() {
        let (t, e) = kernel_term(h, r, lambda)?;
        terms.push(t);
        eval_err += e;
    }
    let p: f64 = terms.iter().sum();
    let decaying = terms.len() >= 3 && {
        let n = terms.len();
        terms[n - 1] < terms[n - 2] && terms[n - 2] < terms[n - 3]
    };
    let last = *terms.last().expect("tables have an r = 0 row");
    let certified = decaying && last < tol * p && table.note().is_none();
    let tail = geometric_tail(&terms);
    Ok(ClassProbability {
        p,
        error_bound: tail + eval_err,
        certified,
        terms,
    })
}

/// The `lambda = 0` value in closed form,
/// `sqrt(2/3) * sum_r (4/3)^r h_r r! / (2r)!`, summed exactly.
pub fn zero_lambda_closed_form(table: &KernelWeightTable) -> f64 {
    zero_lambda_partial_sums(table).last().copied().unwrap_or(0.0)
}

/// Cumulative sums of the closed form through each row of `table`.
pub fn zero_lambda_partial_sums(table: &KernelWeightTable) -> Vec<f64> {
    let sqrt_two_thirds = (2.0f64 / 3.0).sqrt();
    let mut factor = rat(1, 1);
    let mut sum = rat(0, 1);
    let mut out = Vec::with_capacity(table.weights().len());
    for (r, h) in table.weights().iter().enumerate() {
        if r > 0 {
            // (4/3) r! / (2r)! over (r-1)! / (2r-2)!
            factor = factor * rat(4, 3) / BigInt::from(2 * (2 * r - 1));
        }
        sum += &factor * h;
        out.push(Scaled::from_rational(&sum).to_f64() * sqrt_two_thirds);
    }
    out
}
