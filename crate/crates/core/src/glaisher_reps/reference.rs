//! Reference value of ln A from the geometrically convergent series
//!
//! ```text
//! ln A = ln 2/36 + ln π/6 − γ/12 + s/3
//! s    = 3 ln 2 − 2 ln 3 + 1/4 + Σ_{r≥2} (−1)^r (1 − 2^{−r}) (ζ(r) − 1)/(r + 1)
//! ```
//!
//! Each summand is at most `3·2^{−r}/(r+1)` in magnitude, so the tail after
//! `r = R` is below `3·2^{−R}/(R+2)`.

use crate::zeta_apostol::BorweinEta;
use crate::{BigReal, FundamentalConstants, SeriesResult};

const GUARD_BITS: u32 = 32;

/// Summands of the s-series and its closed-form head, at `wp` bits.
struct SSeries {
    head: BigReal,
    terms: Vec<BigReal>,
    tail_log2: f64,
}

fn tail_log2(r: u32) -> f64 {
    3f64.log2() - f64::from(r) - f64::from(r + 2).log2()
}

/// Smallest `R` whose tail bound is below `2^{−target_bits}`.
fn cutoff_for_bits(target_bits: u32) -> u32 {
    let mut r = 2;
    while tail_log2(r) > -f64::from(target_bits) {
        r += 1;
    }
    r
}

fn s_series(r_max: u32, wp: u32) -> SSeries {
    let one = BigReal::one(wp);
    let two = BigReal::from_i64(2, wp);
    let three = BigReal::from_i64(3, wp);
    let head = two.ln().mul_i64(3) - three.ln().mul_i64(2) + one.div_i64(4);
    let zeta_minus_one = BorweinEta::for_bits(wp, wp).zeta_minus_one_table(r_max);
    let terms = zeta_minus_one
        .into_iter()
        .zip(2..=r_max)
        .map(|(z, r)| {
            let weight = (&one - one.mul_pow2(-(r as i32))).div_i64(i64::from(r) + 1);
            let t = (weight * z).with_precision(wp);
            if r % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .collect();
    SSeries {
        head,
        terms,
        tail_log2: tail_log2(r_max),
    }
}

fn ln_a_from_s(s: &BigReal, consts: &FundamentalConstants) -> BigReal {
    let prec = consts.precision_bits();
    let ln2 = BigReal::from_i64(2, prec).ln();
    ln2.div_i64(36) + consts.pi.ln().div_i64(6) - consts.euler_gamma.div_i64(12) + s.div_i64(3)
}

/// ln A correct to about `2^{−prec}`, returned at `prec` bits.
pub fn ln_a_reference(prec: u32) -> SeriesResult {
    let wp = prec + GUARD_BITS;
    let r_max = cutoff_for_bits(prec + 8);
    let series = s_series(r_max, wp);
    let s = series
        .terms
        .iter()
        .fold(series.head.clone(), |acc, t| acc + t);
    let consts = FundamentalConstants::new(wp);
    let value = ln_a_from_s(&s, &consts).with_precision(prec);
    let tail = series.tail_log2.exp2() / 3.0 + (-f64::from(prec)).exp2();
    SeriesResult {
        value,
        terms_used: u64::from(r_max - 1),
        tail_bound: tail,
        converged: true,
    }
}

/// Partial sums of ln A after the s-series terms `r = 2..=r_max`, each paired
/// with the bound on the remaining tail.
pub fn ln_a_reference_trace(r_max: u32, prec: u32) -> Vec<(BigReal, f64)> {
    let wp = prec + GUARD_BITS;
    let series = s_series(r_max.max(2), wp);
    let consts = FundamentalConstants::new(wp);
    let mut s = series.head.clone();
    series
        .terms
        .iter()
        .zip(2u32..)
        .map(|(t, r)| {
            s += t;
            let value = ln_a_from_s(&s, &consts).with_precision(prec);
            (value, tail_log2(r).exp2() / 3.0)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN_A: &str = "0.2487544770337842625472529935761139760974";

    #[test]
    fn matches_frozen_digits() {
        let r = ln_a_reference(200);
        let reference = BigReal::parse(LN_A, 200).unwrap();
        assert!((&r.value - reference).abs() < 1e-39);
        assert!(r.tail_bound < 1e-60);
    }

    #[test]
    fn precision_doubling_agrees() {
        let a = ln_a_reference(256).value;
        let b = ln_a_reference(512).value;
        assert!((a - b).abs().to_f64() < 2f64.powi(-250));
    }

    #[test]
    fn partial_sums_respect_geometric_bound() {
        let limit = ln_a_reference(192).value;
        for (value, bound) in ln_a_reference_trace(60, 192) {
            assert!((&value - &limit).abs().to_f64() <= bound);
        }
    }
}
