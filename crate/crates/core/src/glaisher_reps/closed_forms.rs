//! Closed forms for the sine moments that feed I₃(2) and I₃′(2).
//!
//! With `a = 2kπ` (so `sin a = 0`, `cos a = 1`):
//!
//! ```text
//! S_k = ∫₁^∞ sin(ax)/x⁵ dx      = kπ/6 − k³π³/3 + k⁴π⁴(π − 2 Si(a))/3
//! L_k = ∫₁^∞ sin(ax) ln x/x⁵ dx = −(1/108){3k⁴π⁵[12(γ + ln 2πk) − 25]
//!                                          + 32k³π³ ₁F₂(−½; ½, 5/2; −k²π²)
//!                                          + 96k³π³ ₂F₃(−½, −½; ½, ½, 5/2; −k²π²)}
//! ```
//!
//! The commonly printed versions differ: the polynomial part of `S_k` appears
//! as `2kπ(1 − 2k²π²)/6` (twice the value above) and the ₂F₃ coefficient of
//! `L_k` as 24. Both variants are kept so the identity harness can report on
//! each.

use crate::special_functions::{hyp_pfq, si, PfqParams};
use crate::{BigReal, FundamentalConstants, Result};

/// ₂F₃ coefficient of the log-weighted moment as usually printed.
pub const PRINTED_TWO_F_THREE_COEFF: i64 = 24;
/// ₂F₃ coefficient that reproduces the log-weighted moment.
pub const RECONCILED_TWO_F_THREE_COEFF: i64 = 96;

/// Which polynomial part to use in the closed form of `S_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SineMomentForm {
    /// `(1/6){2kπ(1 − 2k²π²) + 2k⁴π⁴[π − 2Si]}`
    Printed,
    /// `kπ(1 − 2k²π²)/6 + k⁴π⁴[π − 2Si]/3`
    Corrected,
}

/// Special-function values at `a = 2kπ` shared by all closed forms for one `k`.
#[derive(Clone, Debug)]
pub struct MomentInputs {
    pub k: u64,
    pub consts: FundamentalConstants,
    pub si: BigReal,
    pub f12: Option<BigReal>,
    pub f23: Option<BigReal>,
}

impl MomentInputs {
    /// Evaluates Si(2kπ) to `si_tol` and, when `hyp_tol` is given, both
    /// hypergeometric functions at `−k²π²` to that tolerance.
    pub fn evaluate(k: u64, prec: u32, si_tol: f64, hyp_tol: Option<f64>) -> Result<Self> {
        let consts = FundamentalConstants::new(prec);
        let kpi = consts.pi.mul_i64(k as i64);
        let si = si(&kpi.mul_i64(2), si_tol)?;
        let (f12, f23) = match hyp_tol {
            Some(tol) => {
                let x = -kpi.square();
                let one_two = PfqParams::one_f_two();
                let two_three = PfqParams::two_f_three();
                (
                    Some(hyp_pfq(&one_two.numerator, &one_two.denominator, &x, tol)?),
                    Some(hyp_pfq(&two_three.numerator, &two_three.denominator, &x, tol)?),
                )
            }
            None => (None, None),
        };
        Ok(MomentInputs {
            k,
            consts,
            si,
            f12,
            f23,
        })
    }

    fn k(&self) -> BigReal {
        BigReal::from_i64(self.k as i64, self.consts.precision_bits())
    }

    fn kpi(&self) -> BigReal {
        self.consts.pi.mul_i64(self.k as i64)
    }
}

/// `S_k = ∫₁^∞ sin(2kπx)/x⁵ dx` in the requested form.
pub fn sine_moment(inputs: &MomentInputs, form: SineMomentForm) -> BigReal {
    let pi = &inputs.consts.pi;
    let kpi = inputs.kpi();
    let kpi2 = kpi.square();
    let one = BigReal::one(pi.precision_bits());
    let polynomial = &kpi * (&one - kpi2.mul_i64(2));
    let bracket = pi - inputs.si.mul_i64(2);
    let quartic = kpi2.square() * bracket;
    match form {
        SineMomentForm::Printed => (polynomial.mul_i64(2) + quartic.mul_i64(2)).div_i64(6),
        SineMomentForm::Corrected => polynomial.div_i64(6) + quartic.div_i64(3),
    }
}

/// Closed form for `L_k` with the given ₂F₃ coefficient.
///
/// Panics if `inputs` was evaluated without hypergeometric values.
pub fn log_sine_moment(inputs: &MomentInputs, two_f_three_coeff: i64) -> BigReal {
    let c = &inputs.consts;
    let f12 = inputs.f12.as_ref().expect("hypergeometric inputs evaluated");
    let f23 = inputs.f23.as_ref().expect("hypergeometric inputs evaluated");
    let kpi = inputs.kpi();
    let kpi3 = kpi.powi(3);
    let ln_2pik = (c.pi.mul_i64(2 * inputs.k as i64)).ln();
    let bracket = (&c.euler_gamma + ln_2pik).mul_i64(12) - BigReal::from_i64(25, c.precision_bits());
    let leading = (&kpi3 * &kpi * &c.pi * bracket).mul_i64(3);
    let hyper = &kpi3 * (f12.mul_i64(32) + f23.mul_i64(two_f_three_coeff));
    -(leading + hyper).div_i64(108)
}

/// The k-th summand of the boxed hypergeometric series for ln A:
///
/// ```text
/// k(γ−1) + 13/(12π²)·(1/(2π²k²) − 1) + 8/(9π²)·(₁F₂ + 3₂F₃) + k ln(2πk) − 13k/(6π)·Si(2kπ)
/// ```
pub fn boxed_term(inputs: &MomentInputs) -> BigReal {
    let c = &inputs.consts;
    let prec = c.precision_bits();
    let f12 = inputs.f12.as_ref().expect("hypergeometric inputs evaluated");
    let f23 = inputs.f23.as_ref().expect("hypergeometric inputs evaluated");
    let k = inputs.k();
    let one = BigReal::one(prec);
    let pi2 = c.pi.square();
    let linear = &k * (&c.euler_gamma - &one);
    let rational = (pi2.mul_i64(12)).recip().mul_i64(13)
        * ((pi2.mul_i64(2) * k.square()).recip() - &one);
    let hyper = (f12 + f23.mul_i64(3)).mul_i64(8) / pi2.mul_i64(9);
    let log = &k * c.pi.mul_i64(2 * inputs.k as i64).ln();
    let sine = (&k * &inputs.si).mul_i64(13) / c.pi.mul_i64(6);
    linear + rational + hyper + log - sine
}

/// Constant in front of the boxed series: `(1/12)[ln 2π + γ + 11/(2π²)]`.
pub fn boxed_constant(consts: &FundamentalConstants) -> BigReal {
    let eleven_over = BigReal::from_i64(11, consts.precision_bits()) / consts.pi.square().mul_i64(2);
    (&consts.ln_2pi + &consts.euler_gamma + eleven_over).div_i64(12)
}

#[cfg(test)]
mod tests {
    use super::*;

    // mpmath quadosc at 50 digits
    const S_1: &str = "0.1008308242473480765729021005573064246324";
    const L_1: &str = "0.01325575535847730466190492956556089754625";

    #[test]
    fn corrected_forms_match_high_precision_values() {
        let inputs = MomentInputs::evaluate(1, 192, 1e-45, Some(1e-45)).unwrap();
        let s = sine_moment(&inputs, SineMomentForm::Corrected);
        assert!((s - BigReal::parse(S_1, 192).unwrap()).abs() < 1e-38);
        let l = log_sine_moment(&inputs, RECONCILED_TWO_F_THREE_COEFF);
        assert!((l - BigReal::parse(L_1, 192).unwrap()).abs() < 1e-38);
    }

    #[test]
    fn printed_forms_differ_by_the_expected_amounts() {
        let inputs = MomentInputs::evaluate(2, 128, 1e-30, Some(1e-30)).unwrap();
        let printed = sine_moment(&inputs, SineMomentForm::Printed);
        let corrected = sine_moment(&inputs, SineMomentForm::Corrected);
        // difference is the extra kπ(1 − 2k²π²)/6
        let kpi = inputs.consts.pi.mul_i64(2);
        let extra = (&kpi * (BigReal::one(128) - kpi.square().mul_i64(2))).div_i64(6);
        assert!((printed - corrected - extra).abs() < 1e-25);

        let p = log_sine_moment(&inputs, PRINTED_TWO_F_THREE_COEFF);
        let r = log_sine_moment(&inputs, RECONCILED_TWO_F_THREE_COEFF);
        let f23 = inputs.f23.clone().unwrap();
        let expected = (kpi.powi(3) * f23).mul_i64(72).div_i64(108);
        assert!((p - r - expected).abs() < 1e-20);
    }
}
