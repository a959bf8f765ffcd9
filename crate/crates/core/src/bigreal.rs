//! Arbitrary-precision real numbers tagged with their working precision.
//!
//! [`BigReal`] is a thin wrapper over an MPFR float. Binary arithmetic is
//! carried out at the larger of the two operand precisions and the result
//! keeps that precision, so mixing a 128-bit constant with a 2000-bit
//! partial sum never silently truncates the partial sum.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::{Error, Result};

/// Lowest precision any [`BigReal`] may carry.
pub const MIN_PRECISION_BITS: u32 = 64;

/// Highest precision accepted from callers.
pub const MAX_PRECISION_BITS: u32 = 1 << 16;

fn clamp_prec(prec: u32) -> u32 {
    prec.clamp(MIN_PRECISION_BITS, MAX_PRECISION_BITS)
}

#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigReal(Float);

impl BigReal {
    pub fn zero(prec: u32) -> Self {
        BigReal(Float::with_val(clamp_prec(prec), 0))
    }

    pub fn one(prec: u32) -> Self {
        BigReal(Float::with_val(clamp_prec(prec), 1))
    }

    pub fn from_f64(value: f64, prec: u32) -> Self {
        BigReal(Float::with_val(clamp_prec(prec), value))
    }

    pub fn from_i64(value: i64, prec: u32) -> Self {
        BigReal(Float::with_val(clamp_prec(prec), value))
    }

    /// `num / den`, correctly rounded.
    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Self {
        BigReal(Float::with_val(clamp_prec(prec), Rational::from((num, den))))
    }

    pub fn from_rational(value: &Rational, prec: u32) -> Self {
        BigReal(Float::with_val(clamp_prec(prec), value))
    }

    pub fn from_integer(value: &Integer, prec: u32) -> Self {
        BigReal(Float::with_val(clamp_prec(prec), value))
    }

    /// Wraps an MPFR float, raising its precision to the floor if needed.
    pub fn from_float(value: Float) -> Self {
        if value.prec() < MIN_PRECISION_BITS {
            BigReal(Float::with_val(MIN_PRECISION_BITS, value))
        } else {
            BigReal(value)
        }
    }

    /// Parses a decimal literal (`"0.248"`, `"-1.5e-3"`) at the given precision.
    pub fn parse(text: &str, prec: u32) -> Result<Self> {
        let parsed = Float::parse(text.trim()).map_err(|e| Error::Parse {
            input: text.to_owned(),
            reason: e.to_string(),
        })?;
        Ok(BigReal(Float::with_val(clamp_prec(prec), parsed)))
    }

    pub fn precision_bits(&self) -> u32 {
        self.0.prec()
    }

    /// Rounds (or widens) to a new precision.
    pub fn with_precision(&self, prec: u32) -> Self {
        BigReal(Float::with_val(clamp_prec(prec), &self.0))
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Base-2 exponent `e` with `2^(e-1) <= |self| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        self.0.get_exp()
    }

    /// Upper bound on `log2 |self|`, or `None` for zero.
    pub fn log2_magnitude(&self) -> Option<i32> {
        self.exponent()
    }

    pub fn abs(&self) -> Self {
        BigReal(self.0.clone().abs())
    }

    pub fn recip(&self) -> Self {
        BigReal(Float::with_val(self.precision_bits(), self.0.recip_ref()))
    }

    pub fn sqrt(&self) -> Self {
        BigReal(Float::with_val(self.precision_bits(), self.0.sqrt_ref()))
    }

    pub fn square(&self) -> Self {
        BigReal(Float::with_val(self.precision_bits(), self.0.square_ref()))
    }

    pub fn ln(&self) -> Self {
        BigReal(Float::with_val(self.precision_bits(), self.0.ln_ref()))
    }

    pub fn exp(&self) -> Self {
        BigReal(Float::with_val(self.precision_bits(), self.0.exp_ref()))
    }

    pub fn sin(&self) -> Self {
        BigReal(Float::with_val(self.precision_bits(), self.0.sin_ref()))
    }

    pub fn cos(&self) -> Self {
        BigReal(Float::with_val(self.precision_bits(), self.0.cos_ref()))
    }

    pub fn powi(&self, exponent: i32) -> Self {
        BigReal(Float::with_val(self.precision_bits(), (&self.0).pow(exponent)))
    }

    /// `self^exponent` at the larger precision of the two.
    pub fn pow(&self, exponent: &BigReal) -> Self {
        let prec = self.precision_bits().max(exponent.precision_bits());
        BigReal(Float::with_val(prec, (&self.0).pow(&exponent.0)))
    }

    pub fn mul_i64(&self, factor: i64) -> Self {
        BigReal(Float::with_val(self.precision_bits(), &self.0 * factor))
    }

    pub fn div_i64(&self, divisor: i64) -> Self {
        BigReal(Float::with_val(self.precision_bits(), &self.0 / divisor))
    }

    pub fn mul_integer(&self, factor: &Integer) -> Self {
        BigReal(Float::with_val(self.precision_bits(), &self.0 * factor))
    }

    pub fn div_integer(&self, divisor: &Integer) -> Self {
        BigReal(Float::with_val(self.precision_bits(), &self.0 / divisor))
    }

    /// Multiplies by `2^shift` exactly.
    pub fn mul_pow2(&self, shift: i32) -> Self {
        let mut out = self.0.clone();
        out <<= shift;
        BigReal(out)
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Significant decimal digits and decimal exponent with `value = 0.d1d2... * 10^exp`,
    /// truncated toward zero.
    fn truncated_digits(&self, digits: usize) -> (bool, String, i32) {
        let (neg, mantissa, exp) =
            self.0
                .to_sign_string_exp_round(10, Some(digits.max(1)), Round::Zero);
        (neg, mantissa, exp.unwrap_or(0))
    }

    /// Positional decimal with `digits` significant digits, truncated toward zero
    /// (never rounded up). Very large or small magnitudes fall back to
    /// scientific notation.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_owned();
        }
        if !self.0.is_finite() {
            return self.0.to_string();
        }
        let (neg, mantissa, exp) = self.truncated_digits(digits);
        let sign = if neg { "-" } else { "" };
        let body = if (-5..=21).contains(&exp) {
            if exp <= 0 {
                format!("0.{}{}", "0".repeat((-exp) as usize), mantissa)
            } else {
                let split = exp as usize;
                if split >= mantissa.len() {
                    format!("{}{}", mantissa, "0".repeat(split - mantissa.len()))
                } else {
                    format!("{}.{}", &mantissa[..split], &mantissa[split..])
                }
            }
        } else {
            scientific(&mantissa, exp)
        };
        format!("{sign}{body}")
    }

    /// Scientific notation `d.ddd…e±N` with `digits` significant digits, truncated.
    pub fn to_scientific_string(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_owned();
        }
        if !self.0.is_finite() {
            return self.0.to_string();
        }
        let (neg, mantissa, exp) = self.truncated_digits(digits);
        let sign = if neg { "-" } else { "" };
        format!("{sign}{}", scientific(&mantissa, exp))
    }
}

fn scientific(mantissa: &str, exp: i32) -> String {
    let (lead, rest) = mantissa.split_at(1);
    if rest.is_empty() {
        format!("{lead}e{}", exp - 1)
    } else {
        format!("{lead}.{rest}e{}", exp - 1)
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({}, {} bits)", self.to_scientific_string(40), self.precision_bits())
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| decimal_digits(self.precision_bits()));
        f.write_str(&self.to_decimal_string(digits))
    }
}

/// Decimal digits carried by `prec` bits, `floor(prec * log10 2)`.
pub fn decimal_digits(prec: u32) -> usize {
    (f64::from(prec) * std::f64::consts::LOG10_2).floor() as usize
}

impl PartialEq<f64> for BigReal {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for BigReal {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(Float::with_val(self.precision_bits(), -&self.0))
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let prec = self.precision_bits().max(rhs.precision_bits());
                BigReal(Float::with_val(prec, &self.0 $op &rhs.0))
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
        // f64 operands are exact in MPFR; the result keeps the BigReal precision
        impl $trait<f64> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: f64) -> BigReal {
                BigReal(Float::with_val(self.precision_bits(), &self.0 $op rhs))
            }
        }
        impl $trait<f64> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: f64) -> BigReal {
                (&self).$method(rhs)
            }
        }
    };
}

binary_op!(Add, add, +);
binary_op!(Sub, sub, -);
binary_op!(Mul, mul, *);
binary_op!(Div, div, /);

impl AddAssign<&BigReal> for BigReal {
    fn add_assign(&mut self, rhs: &BigReal) {
        if rhs.precision_bits() > self.precision_bits() {
            self.0.set_prec(rhs.precision_bits());
        }
        self.0 += &rhs.0;
    }
}

impl AddAssign<BigReal> for BigReal {
    fn add_assign(&mut self, rhs: BigReal) {
        *self += &rhs;
    }
}

impl SubAssign<&BigReal> for BigReal {
    fn sub_assign(&mut self, rhs: &BigReal) {
        if rhs.precision_bits() > self.precision_bits() {
            self.0.set_prec(rhs.precision_bits());
        }
        self.0 -= &rhs.0;
    }
}

impl SubAssign<BigReal> for BigReal {
    fn sub_assign(&mut self, rhs: BigReal) {
        *self -= &rhs;
    }
}

impl MulAssign<&BigReal> for BigReal {
    fn mul_assign(&mut self, rhs: &BigReal) {
        if rhs.precision_bits() > self.precision_bits() {
            self.0.set_prec(rhs.precision_bits());
        }
        self.0 *= &rhs.0;
    }
}
