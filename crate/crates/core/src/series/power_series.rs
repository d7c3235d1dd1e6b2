use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rational, SeriesError};

/// A power series known exactly through `z^order`.
///
/// Coefficients above the truncation order are unknown and never reported.
/// Binary operators re-truncate to the smaller of the two orders; the
/// `checked_*` methods refuse mismatched orders instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * z^degree`, which is the zero series if `degree > order`.
    pub fn monomial(c: Rational, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// The series `z`.
    pub fn var(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// Takes coefficients for degrees `0..`; missing ones are zero and extra
    /// ones beyond `order` are dropped.
    pub fn from_coeffs<I>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = Rational>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(coeffs: &[(i64, i64)], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&(n, d)| super::rat(n, d)), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^degree`. Panics above the truncation order, where the
    /// coefficient is not known.
    pub fn coeff(&self, degree: usize) -> &Rational {
        assert!(
            degree <= self.order(),
            "coefficient of z^{degree} requested from a series known through z^{}",
            self.order()
        );
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every odd-degree coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn check_orders(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(self * other)
    }

    /// Multiplies by `z^shift`, dropping what falls past the truncation order.
    pub fn shift_up(&self, shift: usize) -> Self {
        let order = self.order();
        let mut s = Self::zero(order);
        for (d, c) in self.coeffs.iter().enumerate() {
            if d + shift > order {
                break;
            }
            s.coeffs[d + shift] = c.clone();
        }
        s
    }

    /// Divides by `z^shift`. The result is known through `order - shift`, so it
    /// is padded back to `order` only if the caller knows the top coefficients
    /// are determined; here the order honestly drops.
    pub fn shift_down(&self, shift: usize) -> Result<Self, SeriesError> {
        if let Some(degree) = self.coeffs.iter().take(shift).position(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible { shift, degree });
        }
        assert!(shift <= self.order(), "shift exceeds truncation order");
        Ok(Self {
            coeffs: self.coeffs[shift..].to_vec(),
        })
    }

    /// Pads with zero coefficients up to `order`. Only meaningful when the
    /// caller knows the added coefficients really are zero (e.g. a polynomial).
    pub fn extend_exact(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(self.order()) + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        let order = self.order();
        let mut s = Self::zero(order.saturating_sub(1));
        for d in 1..=order {
            s.coeffs[d - 1] = &self.coeffs[d] * BigInt::from(d);
        }
        s
    }

    /// Antiderivative with zero constant term; known one degree further.
    pub fn integral(&self) -> Self {
        let mut s = Self::zero(self.order() + 1);
        for (d, c) in self.coeffs.iter().enumerate() {
            s.coeffs[d + 1] = c / BigInt::from(d + 1);
        }
        s
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `self / divisor` through the common truncation order.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let order = self.order().min(divisor.order());
        let b0 = &divisor.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm { op: "div" });
        }
        let (d, d_denom) = integer_coeffs(&divisor.coeffs[..=order]);
        // q[i] = big_q[i] / q_denom, kept over a common denominator
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        let mut big_q: Vec<BigInt> = Vec::with_capacity(order + 1);
        let mut q_denom = BigInt::one();
        for n in 0..=order {
            let mut sum = BigInt::zero();
            for i in 1..=n {
                if !d[i].is_zero() && !big_q[n - i].is_zero() {
                    sum += &d[i] * &big_q[n - i];
                }
            }
            // q_n = (a_n - sum / (d_denom q_denom)) * d_denom / d_0
            let rest = Rational::new(sum, &d_denom * &q_denom);
            let qn = (&self.coeffs[n] - rest) * Rational::new(d_denom.clone(), d[0].clone());
            if !qn.denom().is_one() && !(&q_denom % qn.denom()).is_zero() {
                let grown = q_denom.lcm(qn.denom());
                let factor = &grown / &q_denom;
                for x in big_q.iter_mut() {
                    *x *= &factor;
                }
                q_denom = grown;
            }
            big_q.push(qn.numer() * (&q_denom / qn.denom()));
            q.push(qn);
        }
        Ok(Self { coeffs: q })
    }

    /// `exp(self)`, from the recurrence `n f_n = sum_k k a_k f_{n-k}` that
    /// encodes `f' = a' f`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm { op: "exp" });
        }
        let order = self.order();
        let weighted: Vec<Rational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * BigInt::from(k))
            .collect();
        let mut f: Vec<Rational> = Vec::with_capacity(order + 1);
        f.push(Rational::one());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !weighted[k].is_zero() && !f[n - k].is_zero() {
                    acc += &weighted[k] * &f[n - k];
                }
            }
            f.push(acc / BigInt::from(n));
        }
        Ok(Self { coeffs: f })
    }

    /// `log(1 / (1 - self))`, integrating `a' / (1 - a)`.
    pub fn log_inv_one_minus(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm {
                op: "log_inv_one_minus",
            });
        }
        let order = self.order();
        if order == 0 {
            return Ok(Self::zero(0));
        }
        let one_minus = &Self::one(order - 1) - &self.truncate(order - 1);
        Ok(self.derivative().div(&one_minus)?.integral())
    }

    /// Square root of a series with constant term 1 (the branch with constant
    /// term 1).
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne { op: "sqrt" });
        }
        let order = self.order();
        let half = super::rat(1, 2);
        let mut s: Vec<Rational> = Vec::with_capacity(order + 1);
        s.push(Rational::one());
        for n in 1..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                if !s[i].is_zero() && !s[n - i].is_zero() {
                    acc -= &s[i] * &s[n - i];
                }
            }
            s.push(acc * &half);
        }
        Ok(Self { coeffs: s })
    }
}

/// Evaluates `sum_i poly_coeffs[i] * x^i` by Horner's rule, truncated at the
/// smallest order involved.
pub fn poly_residual(poly_coeffs: &[PowerSeries], x: &PowerSeries) -> PowerSeries {
    let order = poly_coeffs
        .iter()
        .map(PowerSeries::order)
        .fold(x.order(), usize::min);
    let mut acc = PowerSeries::zero(order);
    for a in poly_coeffs.iter().rev() {
        acc = &(&acc * x) + a;
    }
    acc
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (order {})", self.order())
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{d}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order).map(|d| &self.coeffs[d] + &rhs.coeffs[d]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order).map(|d| &self.coeffs[d] - &rhs.coeffs[d]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let (a, da) = integer_coeffs(&self.coeffs[..=order]);
        let (b, db) = integer_coeffs(&rhs.coeffs[..=order]);
        let mut acc = vec![BigInt::zero(); order + 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(order + 1 - i) {
                if !y.is_zero() {
                    acc[i + j] += x * y;
                }
            }
        }
        let denom = da * db;
        PowerSeries {
            coeffs: acc.into_iter().map(|n| Rational::new(n, denom.clone())).collect(),
        }
    }
}

/// Numerators over the least common denominator, and that denominator.
/// Convolving integers defers every gcd to one reduction per coefficient.
fn integer_coeffs(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let denom = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let numers = coeffs
        .iter()
        .map(|c| c.numer() * (&denom / c.denom()))
        .collect();
    (numers, denom)
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($imp:ident :: $method:ident),*) => {$(
        impl $imp for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                $imp::$method(&self, &rhs)
            }
        }
        impl $imp<&PowerSeries> for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: &PowerSeries) -> PowerSeries {
                $imp::$method(&self, rhs)
            }
        }
        impl $imp<PowerSeries> for &PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                $imp::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        -&self
    }
}
