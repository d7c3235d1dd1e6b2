//! Evaluation of
//!
//! ```text
//! A(y, lambda) = exp(-lambda^3/6) / 3^((y+1)/3)
//!                * sum_k (3^(2/3) lambda / 2)^k / (k! Gamma((y + 1 - 2k)/3))
//! ```
//!
//! Away from `lambda = 0` the sum cancels heavily: at `lambda = -6` the terms
//! are about 1e27 times larger than the result, so summing f64 terms returns
//! noise. Splitting `k` by residue mod 3 fixes this. Within a residue class
//! `j` the Gamma arguments step by -2, and with `(3^(2/3)/2)^3 = 9/8` the
//! ratio of consecutive terms is the rational
//!
//! ```text
//! 9 lambda^3 (a_j - 2m - 1)(a_j - 2m - 2) / (8 (k+1)(k+2)(k+3)),   a_j = (y + 1 - 2j)/3,
//! ```
//!
//! exact because `lambda` and `y` are dyadic rationals. Only three irrational
//! leading factors remain per evaluation (`3^(2j/3) / Gamma(a_j)`); they are
//! reduced to `1/Gamma` at a base point in `(0, 1]` and taken from 150-digit
//! constants when the base point is one of 1, 1/2, 1/3, 2/3, 1/6, 5/6, which
//! covers every `y = 3r + 1/2` and every integer `y`. Terms are then carried
//! in big fixed point with a tracked rounding bound, so the returned error
//! bound accounts for rounding, the constants, and truncation.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::gamma::reciprocal_gamma;
use super::scaled::{ldexp, Scaled};
use super::AiryError;
use crate::series::{rat, Rational};

pub const DEFAULT_MAX_TERMS: usize = 500;
/// Largest `|lambda|` accepted at all. Convergence within the term cap is
/// only reached for roughly `|lambda| <= 7.5`; beyond that evaluation fails
/// explicitly.
pub const LAMBDA_ENVELOPE: f64 = 30.0;

const INITIAL_PRECISION: u64 = 192;
const MAX_PRECISION: u64 = 640;

// 1/Gamma at the base points, and cube roots of 3 and 9, to 150 digits.
const RG_1_6: &str = "0.179652035507897345726267195182894197659503536468827990668723506310232976916980965715040608358882506286565608270373599776437149642921187591711343879788";
const RG_1_3: &str = "0.37328217390739522832635031242331966097696715352624923913354109742669398394254616666976578850843643128743173651118786495534559419455443253679895025542";
const RG_1_2: &str = "0.564189583547756286948079451560772585844050629328998856844085721710642468441493414486743660202107363443028347906361707351689931494826162866365489520018";
const RG_2_3: &str = "0.738488111621648312935754375164597641168794066575621976139761715314594841411910803136781994553850403935341580870419933384352289153881096461957105670431";
const RG_5_6: &str = "0.885906706494839710438322835144053297541117961715157913192531004503740055928466548307307606256559003317417131211628786520095098589268936196865967139042";
const CBRT_3: &str = "1.44224957030740838232163831078010958839186925349935057754641619454168759682999733985475547970564525668683508085448954996642542394611025971486895015719";
const CBRT_9: &str = "2.08008382305190411453005682435788538633780534037326210969759108020010631139726877360605663679075748672867159208657452053890780655143240643515595641494";
const CONSTANT_REL_ERR: f64 = 1e-148;
// reciprocal_gamma on (0, 1]
const F64_GAMMA_REL_ERR: f64 = 2e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AiryOptions {
    /// Hard cap on the number of series terms.
    pub max_terms: usize,
}

impl Default for AiryOptions {
    fn default() -> Self {
        Self {
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryEvalResult {
    /// `A(y, lambda)` as an f64; flushes to zero when the true value is below
    /// the f64 range, in which case [`scaled`](Self::scaled) still holds it.
    pub value: f64,
    pub scaled: Scaled,
    pub terms_used: usize,
    /// Bound on `|computed - exact|`: truncation tail plus rounding plus the
    /// error of the transcendental constants.
    pub tail_bound: f64,
    /// `tail_bound / |value|`, also meaningful when `value` underflows.
    pub relative_error: f64,
}

/// `A(y, lambda)` to relative accuracy `tol`, with the default term cap.
pub fn airy_a(y: f64, lambda: f64, tol: f64) -> Result<AiryEvalResult, AiryError> {
    airy_a_with(y, lambda, tol, &AiryOptions::default())
}

pub fn airy_a_with(
    y: f64,
    lambda: f64,
    tol: f64,
    options: &AiryOptions,
) -> Result<AiryEvalResult, AiryError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(AiryError::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if !(y > 0.0 && y.is_finite()) {
        return Err(AiryError::InvalidArgument(format!("y must be positive, got {y}")));
    }
    if !lambda.is_finite() || lambda.abs() > LAMBDA_ENVELOPE {
        return Err(AiryError::OutsideEnvelope { lambda });
    }
    if options.max_terms < 3 {
        return Err(AiryError::InvalidArgument("max_terms must be at least 3".into()));
    }

    let setup = Setup::new(y, lambda);
    let mut precision = INITIAL_PRECISION;
    loop {
        let pass = setup.sum(precision, tol, options.max_terms)?;
        let rel = pass.relative_error();
        if rel <= tol {
            let value = pass.value();
            return Ok(AiryEvalResult {
                value: value.to_f64(),
                scaled: value,
                terms_used: pass.terms_used,
                tail_bound: rel * value.to_f64().abs(),
                relative_error: rel,
            });
        }
        let rounding = pass.rounding_rel / pass.sum_rel.abs();
        if rounding > tol / 4.0 && precision < MAX_PRECISION {
            let extra = (rounding / (tol / 16.0)).log2().ceil().clamp(0.0, MAX_PRECISION as f64) as u64;
            precision = (precision + extra + 32).min(MAX_PRECISION);
            continue;
        }
        return Err(AiryError::ToleranceNotReached {
            y,
            lambda,
            terms: pass.terms_used,
            achieved: rel,
        });
    }
}

/// One residue class `k = 3m + offset` of the series.
struct ClassSeries {
    offset: usize,
    a: f64,
    /// `9 L^3`, with `lambda = L / lambda_den`.
    ratio_num_lambda: BigInt,
    a_num: BigInt,
    a_den: BigInt,
    /// `8 lambda_den^3 a_den^2`
    ratio_den_fixed: BigInt,
    /// `3^(2j/3) / Gamma(a_j) * lambda^j / (2^j j!)`, approximately.
    start: Rational,
    start_rel_err: f64,
}

impl ClassSeries {
    /// Exact ratio `t_{m+1} / t_m` as an unreduced fraction.
    fn ratio(&self, m: usize) -> (BigInt, BigInt) {
        let k = 3 * m + self.offset;
        let f1 = &self.a_num - &self.a_den * BigInt::from(2 * m + 1);
        let f2 = &self.a_num - &self.a_den * BigInt::from(2 * m + 2);
        let num = &self.ratio_num_lambda * f1 * f2;
        let den = &self.ratio_den_fixed * BigInt::from((k + 1) * (k + 2) * (k + 3));
        (num, den)
    }

    fn ratio_f64(&self, lambda: f64, m: usize) -> f64 {
        let k = (3 * m + self.offset) as f64;
        let mf = m as f64;
        9.0 * lambda.powi(3) * (self.a - 2.0 * mf - 1.0) * (self.a - 2.0 * mf - 2.0)
            / (8.0 * (k + 1.0) * (k + 2.0) * (k + 3.0))
    }

    /// Upper bound on `|t_{q+1} / t_q|` over all `q >= from`; the bound is
    /// decreasing in `from`.
    fn ratio_sup(&self, lambda: f64, from: usize) -> f64 {
        let q = from as f64;
        9.0 / 8.0 * lambda.abs().powi(3) * (2.0 * q + 2.0 + self.a.abs()).powi(2)
            / (3.0 * q + 1.0).powi(3)
    }
}

struct Setup {
    y: f64,
    lambda: f64,
    classes: Vec<ClassSeries>,
}

struct Pass {
    sum: BigInt,
    precision: u64,
    top_log2: i64,
    sum_rel: f64,
    rounding_rel: f64,
    constants_rel: f64,
    truncation_rel: f64,
    prefactor: Scaled,
    prefactor_rel: f64,
    terms_used: usize,
}

impl Pass {
    fn value(&self) -> Scaled {
        Scaled::from_bigint(&self.sum, self.top_log2 - self.precision as i64)
            * self.prefactor
    }

    fn relative_error(&self) -> f64 {
        if self.sum_rel == 0.0 {
            return f64::INFINITY;
        }
        let series = (self.rounding_rel + self.constants_rel + self.truncation_rel) / self.sum_rel.abs();
        series + self.prefactor_rel + 4.0 * f64::EPSILON
    }
}

fn decimal(s: &str) -> Rational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal constant");
    Rational::new(digits, BigInt::from(10).pow(frac.len() as u32))
}

/// `1/Gamma(b)` for `b` in `(0, 1]`, with its relative error.
fn base_reciprocal_gamma(b: &Rational) -> (Rational, f64) {
    let table = [
        (rat(1, 1), None),
        (rat(1, 2), Some(RG_1_2)),
        (rat(1, 3), Some(RG_1_3)),
        (rat(2, 3), Some(RG_2_3)),
        (rat(1, 6), Some(RG_1_6)),
        (rat(5, 6), Some(RG_5_6)),
    ];
    for (point, value) in table {
        if *b == point {
            return match value {
                None => (Rational::one(), 0.0),
                Some(s) => (decimal(s), CONSTANT_REL_ERR),
            };
        }
    }
    let approx = reciprocal_gamma(Scaled::from_rational(b).to_f64());
    let exact = Rational::from_float(approx).expect("finite on (0, 1]");
    (exact, F64_GAMMA_REL_ERR)
}

impl Setup {
    fn new(y: f64, lambda: f64) -> Self {
        let yq = Rational::from_float(y).expect("finite");
        let lq = Rational::from_float(lambda).expect("finite");
        let nine_l3 = BigInt::from(9) * lq.numer().pow(3);
        let eight_lden3 = BigInt::from(8) * lq.denom().pow(3);

        let classes = (0..3)
            .map(|j| {
                let a = (&yq + Rational::one() - Rational::from_integer(BigInt::from(2 * j))) / BigInt::from(3);
                // a = b + shift with b in (0, 1]
                let shift = (a.ceil() - Rational::one()).to_integer();
                let b = &a - Rational::from_integer(shift.clone());
                let shift = shift.to_i64().expect("moderate y");
                let mut factor = Rational::one();
                if shift >= 0 {
                    for i in 0..shift {
                        factor /= &b + Rational::from_integer(BigInt::from(i));
                    }
                } else {
                    for i in 1..=-shift {
                        factor *= &b - Rational::from_integer(BigInt::from(i));
                    }
                }
                let (rg_base, mut rel_err) = base_reciprocal_gamma(&b);
                let pow3 = match j {
                    0 => Rational::one(),
                    1 => decimal(CBRT_9),
                    _ => decimal(CBRT_3) * BigInt::from(3),
                };
                if j > 0 {
                    rel_err += CONSTANT_REL_ERR;
                }
                let first_term = match j {
                    0 => Rational::one(),
                    1 => &lq / BigInt::from(2),
                    _ => &lq * &lq / BigInt::from(8),
                };
                let start = pow3 * rg_base * factor * first_term;
                ClassSeries {
                    offset: j,
                    a: Scaled::from_rational(&a).to_f64(),
                    ratio_num_lambda: nine_l3.clone(),
                    ratio_den_fixed: &eight_lden3 * a.denom() * a.denom(),
                    a_num: a.numer().clone(),
                    a_den: a.denom().clone(),
                    start,
                    start_rel_err: rel_err,
                }
            })
            .collect();
        Self { y, lambda, classes }
    }

    /// `exp(-lambda^3/6) / 3^((y+1)/3)` and its relative error. The whole
    /// power of 3 is exact, so the error does not grow with `y`.
    fn prefactor(&self) -> (Scaled, f64) {
        let e = (self.y + 1.0) / 3.0;
        let whole = e.floor();
        let inv_pow3 = Scaled::from_rational(&Rational::new(BigInt::one(), BigInt::from(3).pow(whole as u32)));
        let value = inv_pow3
            * Scaled::from_f64(3f64.powf(whole - e))
            * Scaled::exp2(-self.lambda.powi(3) / 6.0 * std::f64::consts::LOG2_E);
        let err = 4.0 * f64::EPSILON * (self.lambda.powi(3).abs() / 6.0 + 4.0);
        (value, err)
    }

    /// `floor(log2)` of the largest term magnitude within the term cap.
    fn top_log2(&self, max_terms: usize) -> i64 {
        let mut top = f64::NEG_INFINITY;
        for class in &self.classes {
            let mut log = Scaled::from_rational(&class.start).log2_abs();
            let mut m = 0;
            while log > f64::NEG_INFINITY && 3 * m + class.offset < max_terms {
                top = top.max(log);
                log += class.ratio_f64(self.lambda, m).abs().log2();
                m += 1;
            }
        }
        top.floor() as i64
    }

    fn sum(&self, precision: u64, tol: f64, max_terms: usize) -> Result<Pass, AiryError> {
        let top = self.top_log2(max_terms);
        let shift = precision as i64 - top;
        let to_fixed = |x: &Rational| -> BigInt {
            if shift >= 0 {
                (x.numer() << shift as u64) / x.denom()
            } else {
                x.numer() / (x.denom() << (-shift) as u64)
            }
        };
        // values relative to 2^top
        let rel = |x: &BigInt| Scaled::from_bigint(x, -(precision as i64)).to_f64();

        let mut running: Vec<BigInt> = self.classes.iter().map(|c| to_fixed(&c.start)).collect();
        let mut ulp_err = [1.0f64; 3];
        let mut next_index = [0usize; 3];
        let mut abs_total = [0.0f64; 3];
        let mut last_term = [f64::INFINITY; 3];
        let mut sum = BigInt::zero();
        let mut rounding_ulps = 0.0;
        let hump = 3f64.powf(2.0 / 3.0) / 2.0 * self.lambda.abs();

        for k in 0..max_terms {
            let j = k % 3;
            let class = &self.classes[j];
            let m = next_index[j];
            let term = &running[j];
            sum += term;
            rounding_ulps += ulp_err[j];
            let term_rel = rel(term).abs();
            abs_total[j] += term_rel;
            last_term[j] = term_rel;
            next_index[j] += 1;
            if !term.is_zero() {
                let (num, den) = class.ratio(m);
                if num.is_zero() {
                    running[j] = BigInt::zero();
                    ulp_err[j] = 0.0;
                } else {
                    running[j] = &running[j] * num / den;
                    ulp_err[j] = ulp_err[j] * class.ratio_f64(self.lambda, m).abs() + 1.0;
                }
            }

            if k < 2 || (k as f64) <= hump {
                continue;
            }
            let sum_rel = rel(&sum);
            if last_term.iter().any(|&t| t > tol / 16.0 * sum_rel.abs()) {
                continue;
            }
            let mut truncation = 0.0;
            let mut decaying = true;
            for (i, c) in self.classes.iter().enumerate() {
                if running[i].is_zero() {
                    continue;
                }
                let sup = c.ratio_sup(self.lambda, next_index[i]);
                if sup > 0.5 {
                    decaying = false;
                    break;
                }
                truncation += rel(&running[i]).abs() / (1.0 - sup);
            }
            if !decaying {
                continue;
            }
            let constants_rel = self
                .classes
                .iter()
                .zip(abs_total)
                .map(|(c, total)| c.start_rel_err * total)
                .sum();
            let (prefactor, prefactor_rel) = self.prefactor();
            return Ok(Pass {
                sum,
                precision,
                top_log2: top,
                sum_rel,
                rounding_rel: ldexp(rounding_ulps + running.len() as f64, -(precision as i64)),
                constants_rel,
                truncation_rel: truncation,
                prefactor,
                prefactor_rel,
                terms_used: k + 1,
            });
        }
        Err(AiryError::ToleranceNotReached {
            y: self.y,
            lambda: self.lambda,
            terms: max_terms,
            achieved: f64::INFINITY,
        })
    }
}
