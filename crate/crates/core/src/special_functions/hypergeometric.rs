//! Generalized hypergeometric series `pFq(a; b; x)` for `p ≤ q`.
//!
//! For large negative `x` the terms grow to roughly `exp((q−p+1)|x|^{1/(q−p+1)})`
//! before decaying, and the alternating sum cancels almost all of that. The
//! working precision is therefore raised by the peak-term size; for the
//! `q = p + 1` series at `x = −k²π²` this is `ceil(2kπ·log₂e) + 32` bits.
//! After summing, the observed peak is checked against the precision actually
//! used and the sum is redone at higher precision if the estimate fell short.

use rug::{Integer, Rational};

use crate::special_functions::round_to_output;
use crate::{bits_for_tol, check_tol, BigReal, Error, Result};

/// Default cap on the escalated working precision.
pub const DEFAULT_PFQ_CEILING_BITS: u32 = 8192;

const GUARD_BITS: u32 = 32;

/// Parameter lists of a `pFq`.
#[derive(Clone, Debug, PartialEq)]
pub struct PfqParams {
    pub numerator: Vec<Rational>,
    pub denominator: Vec<Rational>,
}

fn half(num: i32) -> Rational {
    Rational::from((num, 2))
}

impl PfqParams {
    pub fn new(numerator: Vec<Rational>, denominator: Vec<Rational>) -> Result<Self> {
        if numerator.len() > denominator.len() {
            return Err(Error::Domain {
                function: "hyp_pfq",
                argument: format!("p = {}, q = {}", numerator.len(), denominator.len()),
                domain: "p <= q",
            });
        }
        if let Some(bad) = denominator.iter().find(|b| b.is_integer() && **b <= 0) {
            return Err(Error::Domain {
                function: "hyp_pfq",
                argument: format!("denominator parameter {bad}"),
                domain: "denominator parameters not in {0, -1, -2, ...}",
            });
        }
        Ok(PfqParams {
            numerator,
            denominator,
        })
    }

    /// ₁F₂(−1/2; 1/2, 5/2; ·)
    pub fn one_f_two() -> Self {
        PfqParams {
            numerator: vec![half(-1)],
            denominator: vec![half(1), half(5)],
        }
    }

    /// ₂F₃(−1/2, −1/2; 1/2, 1/2, 5/2; ·)
    pub fn two_f_three() -> Self {
        PfqParams {
            numerator: vec![half(-1), half(-1)],
            denominator: vec![half(1), half(1), half(5)],
        }
    }

    /// Extra working bits needed to absorb the peak term at argument `x`.
    pub fn escalation_bits(&self, x: f64) -> u32 {
        if x == 0.0 {
            return 0;
        }
        let order = (self.denominator.len() - self.numerator.len() + 1) as f64;
        let growth = order * x.abs().powf(1.0 / order) * std::f64::consts::LOG2_E;
        growth.ceil() as u32 + GUARD_BITS
    }
}

/// `pFq(numerator; denominator; x)` to absolute accuracy `tol`, returned at
/// the precision of `x`.
pub fn hyp_pfq(
    numerator: &[Rational],
    denominator: &[Rational],
    x: &BigReal,
    tol: f64,
) -> Result<BigReal> {
    hyp_pfq_with_ceiling(numerator, denominator, x, tol, DEFAULT_PFQ_CEILING_BITS)
}

pub fn hyp_pfq_with_ceiling(
    numerator: &[Rational],
    denominator: &[Rational],
    x: &BigReal,
    tol: f64,
    ceiling_bits: u32,
) -> Result<BigReal> {
    check_tol("hyp_pfq", tol)?;
    let params = PfqParams::new(numerator.to_vec(), denominator.to_vec())?;
    let prec = x.precision_bits();
    if x.is_zero() {
        return Ok(BigReal::one(prec));
    }
    let mut wp = prec.max(bits_for_tol(tol)) + params.escalation_bits(x.to_f64());
    loop {
        if wp > ceiling_bits {
            return Err(Error::Precision {
                function: "hyp_pfq",
                required_bits: wp,
                detail: format!(" (ceiling {ceiling_bits} bits)"),
            });
        }
        let pass = sum_series(&params, x, tol, wp);
        let terms_log2 = 64 - pass.terms.leading_zeros() as i64;
        let needed = pass.peak_log2 + terms_log2 + i64::from(bits_for_tol(tol)) + 8;
        if needed <= i64::from(wp) {
            return round_to_output("hyp_pfq", pass.sum, prec, tol);
        }
        let next = needed as u32 + GUARD_BITS;
        if next > ceiling_bits {
            return Err(Error::Precision {
                function: "hyp_pfq",
                required_bits: next,
                detail: format!(
                    " (peak term ~2^{}, ceiling {ceiling_bits} bits)",
                    pass.peak_log2
                ),
            });
        }
        wp = next;
    }
}

struct SeriesPass {
    sum: BigReal,
    terms: u64,
    peak_log2: i64,
}

/// Splits each rational parameter into (numerator, denominator) integers.
fn split(params: &[Rational]) -> Vec<(Integer, Integer)> {
    params
        .iter()
        .map(|r| (r.numer().clone(), r.denom().clone()))
        .collect()
}

fn sum_series(params: &PfqParams, x: &BigReal, tol: f64, wp: u32) -> SeriesPass {
    let upper = split(&params.numerator);
    let lower = split(&params.denominator);
    let x = x.with_precision(wp);
    let x_abs = x.abs().to_f64();
    let largest_param = params
        .numerator
        .iter()
        .chain(&params.denominator)
        .map(|r| r.to_f64().abs())
        .fold(0.0, f64::max);
    let monotone_from = (2.0 * largest_param).ceil() as u64 + 2;

    let mut term = BigReal::one(wp);
    let mut sum = BigReal::one(wp);
    let mut peak_log2 = 1i64;
    let mut n: u64 = 0;
    loop {
        let ni = Integer::from(n);
        let mut num = Integer::from(1);
        let mut den = Integer::from(n + 1);
        for (p, q) in &upper {
            num *= p + Integer::from(&ni * q);
            den *= q;
        }
        for (p, q) in &lower {
            den *= p + Integer::from(&ni * q);
            num *= q;
        }
        if num == 0 {
            // terminating series
            return SeriesPass {
                sum,
                terms: n + 1,
                peak_log2,
            };
        }
        let ratio = num.to_f64().abs() / den.to_f64().abs() * x_abs;
        term = (&term * &x).mul_integer(&num).div_integer(&den);
        n += 1;
        if let Some(e) = term.exponent() {
            peak_log2 = peak_log2.max(i64::from(e));
        }
        let small = term.abs().to_f64() <= tol / 8.0;
        if small && n >= monotone_from && ratio <= 0.5 {
            // remaining terms shrink at least geometrically by 1/2: tail ≤ 2|term|
            return SeriesPass {
                sum,
                terms: n,
                peak_log2,
            };
        }
        sum += &term;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(params: &PfqParams, x: &BigReal, tol: f64) -> BigReal {
        hyp_pfq(&params.numerator, &params.denominator, x, tol).unwrap()
    }

    #[test]
    fn zero_argument_gives_exactly_one() {
        for prec in [64, 128, 1000] {
            let v = eval(&PfqParams::two_f_three(), &BigReal::zero(prec), 1e-10);
            assert_eq!(v, 1.0);
            assert_eq!(v.precision_bits(), prec);
        }
    }

    #[test]
    fn elementary_special_cases() {
        // 0F0(;;x) = e^x and 0F1(;3/2;-z²/4) = sin z / z
        let x = BigReal::from_f64(-3.5, 128);
        let e = hyp_pfq(&[], &[], &x, 1e-30).unwrap();
        assert!((e - x.exp()).abs() < 1e-30);
        let z = BigReal::from_f64(7.0, 128);
        let arg = -z.square().div_i64(4);
        let v = hyp_pfq(&[], &[half(3)], &arg, 1e-30).unwrap();
        assert!((v - z.sin() / &z).abs() < 1e-30);
    }

    #[test]
    fn large_negative_argument_survives_cancellation() {
        // x = −(30π)²: peak term ~ e^{60π} ≈ 10^81
        let pi = crate::constants::pi(128);
        let x = -(pi.mul_i64(30)).square();
        let a = eval(&PfqParams::one_f_two(), &x, 1e-25);
        let b = eval(&PfqParams::one_f_two(), &x.with_precision(256), 1e-25);
        assert!((a - b).abs() < 1e-25);
    }

    #[test]
    fn rejects_bad_parameters() {
        let r = hyp_pfq(&[half(1), half(1)], &[half(3)], &BigReal::one(64), 1e-10);
        assert!(matches!(r, Err(Error::Domain { .. })));
        let r = hyp_pfq(&[half(1)], &[Rational::from(-2)], &BigReal::one(64), 1e-10);
        assert!(matches!(r, Err(Error::Domain { .. })));
    }

    #[test]
    fn ceiling_is_enforced() {
        let x = BigReal::from_f64(-1.0e6, 128);
        let p = PfqParams::one_f_two();
        let r = hyp_pfq_with_ceiling(&p.numerator, &p.denominator, &x, 1e-10, 1024);
        assert!(matches!(r, Err(Error::Precision { .. })));
    }

    #[test]
    fn terminating_series() {
        // 2F1-like polynomial via 1F1(-2; 1; x) = 1 - 2x + x²/2
        let x = BigReal::from_f64(3.0, 64);
        let v = hyp_pfq(&[Rational::from(-2)], &[Rational::from(1)], &x, 1e-15).unwrap();
        assert_eq!(v, 1.0 - 6.0 + 4.5);
    }
}
