use rug::Float;

use crate::constants;
use crate::{BigReal, SeriesResult};

/// Fractional part `x - floor(x)`.
fn fractional_part(x: &BigReal) -> BigReal {
    let floor = Float::with_val(x.precision_bits(), x.as_float().floor_ref());
    x - BigReal::from_float(floor)
}

/// P₃(x) = B₃({x}) = t³ − (3/2)t² + t/2 with t the fractional part of x.
///
/// This is the sum of the sine series `3/(2π³) Σ sin(2kπx)/k³`; the
/// equivalence is checked by the property tests rather than assumed.
pub fn p3_closed(x: &BigReal) -> BigReal {
    let t = fractional_part(x);
    // t (t - 1/2)(t - 1) expands to the cubic above
    let half = BigReal::from_ratio(1, 2, x.precision_bits());
    let one = BigReal::one(x.precision_bits());
    &t * (&t - &half) * (&t - &one)
}

/// The `terms`-term partial sum of the sine series of P₃.
///
/// `tail_bound` is `3/(2π³) Σ_{k>K} k⁻³ ≤ 3/(4π³K²)`.
pub fn p3_fourier(x: &BigReal, terms: u64) -> SeriesResult {
    let prec = x.precision_bits();
    let k_bits = 64 - terms.leading_zeros();
    let wide = prec + k_bits + 16;
    let t = fractional_part(x).with_precision(wide);
    let two_pi = constants::pi(wide).mul_pow2(1);
    let mut sum = BigReal::zero(wide);
    for k in 1..=terms {
        // reduce k·t modulo 1 exactly before taking the sine
        let kt = fractional_part(&t.mul_i64(k as i64));
        let angle = &kt * &two_pi;
        let k3 = (k as f64).powi(3);
        let term = if k3 < 9.0e15 {
            angle.sin().div_i64(k3 as i64)
        } else {
            angle.sin() / BigReal::from_i64(k as i64, wide).powi(3)
        };
        sum += &term;
    }
    let pi = constants::pi(wide);
    let scale = BigReal::from_i64(3, wide) / pi.powi(3).mul_i64(2);
    let value = (sum * scale).with_precision(prec);
    let tail = if terms == 0 {
        f64::INFINITY
    } else {
        3.0 / (4.0 * std::f64::consts::PI.powi(3) * (terms as f64).powi(2))
    };
    SeriesResult::new(value, terms, tail, f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_at_lattice_points() {
        assert!(p3_closed(&BigReal::from_f64(1.0, 128)).is_zero());
        assert!(p3_closed(&BigReal::from_f64(1.5, 128)).is_zero());
        assert_eq!(p3_closed(&BigReal::from_f64(1.25, 128)), 0.046875);
        assert_eq!(p3_closed(&BigReal::from_f64(7.75, 128)), -0.046875);
    }

    #[test]
    fn fourier_vanishes_at_integers() {
        let r = p3_fourier(&BigReal::from_f64(1.0, 128), 100);
        assert!(r.value.is_zero());
        assert_eq!(r.terms_used, 100);
    }

    #[test]
    fn fourier_matches_closed_form_within_bound() {
        let x = BigReal::from_f64(1.25, 128);
        let r = p3_fourier(&x, 10_000);
        assert!(r.tail_bound < 2.5e-10);
        assert!((r.value - 0.046875).abs().to_f64() <= r.tail_bound);

        let x = BigReal::from_f64(1.1, 128);
        let r = p3_fourier(&x, 1000);
        let bound = 3.0 / (4.0 * std::f64::consts::PI.powi(3) * 1.0e6);
        assert!((r.value - p3_closed(&x)).abs().to_f64() <= bound);
    }
}
