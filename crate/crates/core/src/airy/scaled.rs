use std::ops::Mul;

use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};

use crate::series::Rational;

/// A real number `mantissa * 2^exponent` with an f64 mantissa and an
/// unbounded exponent, for products whose factors over- or underflow f64
/// separately (huge kernel counts times tiny Airy values).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    mantissa: f64,
    exponent: i64,
}

impl Scaled {
    pub const ZERO: Scaled = Scaled {
        mantissa: 0.0,
        exponent: 0,
    };

    pub fn new(mantissa: f64, exponent: i64) -> Self {
        Self { mantissa, exponent }.normalized()
    }

    pub fn from_f64(x: f64) -> Self {
        Self::new(x, 0)
    }

    /// `x * 2^exponent`, rounded to 53 bits.
    pub fn from_bigint(x: &BigInt, exponent: i64) -> Self {
        if x.is_zero() {
            return Self::ZERO;
        }
        let bits = x.bits() as i64;
        let drop = (bits - 64).max(0);
        let top = (x.magnitude() >> drop as u64)
            .to_u64()
            .expect("at most 64 bits") as f64;
        let m = if x.sign() == Sign::Minus { -top } else { top };
        Self::new(m, exponent + drop)
    }

    pub fn from_rational(x: &Rational) -> Self {
        let n = Self::from_bigint(x.numer(), 0);
        let d = Self::from_bigint(x.denom(), 0);
        Self::new(n.mantissa / d.mantissa, n.exponent - d.exponent)
    }

    /// `2^log2`, for exponents far outside the f64 range.
    pub fn exp2(log2: f64) -> Self {
        let whole = log2.floor();
        Self::new((log2 - whole).exp2(), whole as i64)
    }

    fn normalized(self) -> Self {
        if self.mantissa == 0.0 || !self.mantissa.is_finite() {
            return Self {
                mantissa: self.mantissa,
                exponent: 0,
            };
        }
        let e = self.mantissa.abs().log2().floor() as i64;
        Self {
            mantissa: ldexp(self.mantissa, -e),
            exponent: self.exponent + e,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    /// `log2 |x|`; `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.mantissa.abs().log2() + self.exponent as f64
        }
    }

    /// Nearest f64, flushing to zero or infinity outside the range.
    pub fn to_f64(&self) -> f64 {
        ldexp(self.mantissa, self.exponent)
    }
}

impl Mul for Scaled {
    type Output = Scaled;

    fn mul(self, rhs: Scaled) -> Scaled {
        Scaled::new(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent)
    }
}

/// `x * 2^e` without intermediate overflow.
pub(crate) fn ldexp(mut x: f64, mut e: i64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * 2f64.powi(e as i32)
}
