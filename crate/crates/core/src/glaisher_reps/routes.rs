//! Four of the six routes to ln A:
//!
//! ```text
//! R1  ln A = 1/12 − ζ′(−1)                          (Apostol quadrature)
//! R3  ln A = 1/4 + (1/(2π²)) Σ_{k≥1} Ci(2kπ)/k²
//! R4  ln A = ln 2π/12 + γ/12 − ζ′(2)/(2π²)           (Euler–Maclaurin ζ′)
//! R5  ln A = lim Σ_{k≤n} k ln k − (n²/2 + n/2 + 1/12) ln n + n²/4
//! ```

use crate::special_functions::ci_at_2kpi;
use crate::zeta_apostol::{zeta_prime_apostol, zeta_prime_direct};
use crate::{
    bits_for_tol, check_tol, BigReal, Error, FundamentalConstants, QuadratureConfig, Result,
    SeriesResult,
};

use super::TracePoint;

const GUARD_BITS: u32 = 16;

fn working_precision(prec: u32, tol: f64, terms: u64) -> u32 {
    prec.max(bits_for_tol(tol)) + GUARD_BITS + (64 - terms.leading_zeros())
}

fn positive(function: &'static str, name: &str, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain {
            function,
            argument: format!("{name} = 0"),
            domain: "at least one term",
        });
    }
    Ok(())
}

/// R1 with the quadrature tail bound of `cfg`; converged when it is ≤ `tol`.
pub fn ln_a_r1(cfg: &QuadratureConfig, tol: f64, prec: u32) -> Result<SeriesResult> {
    check_tol("ln_a_r1", tol)?;
    cfg.validate()?;
    let x = BigReal::from_i64(-1, prec + GUARD_BITS);
    let zp = zeta_prime_apostol(&x, cfg)?;
    let value = BigReal::from_ratio(1, 12, x.precision_bits()) - zp.value;
    Ok(SeriesResult::new(
        value.with_precision(prec),
        cfg.intervals,
        zp.tail_bound,
        tol,
    ))
}

/// (1/(2π²))·(1/(2π²))·Σ_{k>K} 1/k⁴ ≤ 1/(12π⁴K³), using |Ci(2kπ)| ≤ 2/(2kπ)².
pub fn r3_tail_bound(terms: u64) -> f64 {
    let pi = std::f64::consts::PI;
    1.0 / (12.0 * pi.powi(4) * (terms as f64).powi(3))
}

/// R3 partial sums after each of the first `terms` summands.
pub fn r3_trace(terms: u64, tol: f64, prec: u32) -> Result<Vec<TracePoint>> {
    check_tol("ln_a_r3", tol)?;
    positive("ln_a_r3", "K", terms)?;
    let wp = working_precision(prec, tol, terms);
    let consts = FundamentalConstants::new(wp);
    let scale = consts.pi.square().mul_i64(2).recip();
    let quarter = BigReal::from_ratio(1, 4, wp);
    let mut sum = BigReal::zero(wp);
    let mut out = Vec::with_capacity(terms as usize);
    for k in 1..=terms {
        let ci = ci_at_2kpi(k, tol, wp)?;
        sum += ci.div_integer(&rug::Integer::from(k).square());
        let value = &quarter + &scale * &sum;
        // per-summand Ci errors ≤ tol contribute at most tol·ζ(2)/(2π²) = tol/12
        let bound = r3_tail_bound(k) + tol / 12.0;
        out.push(TracePoint {
            k,
            value: value.with_precision(prec),
            tail_bound: bound,
        });
    }
    Ok(out)
}

pub fn ln_a_r3(terms: u64, tol: f64, prec: u32) -> Result<SeriesResult> {
    let last = r3_trace(terms, tol, prec)?
        .pop()
        .expect("at least one term");
    Ok(SeriesResult::new(last.value, terms, last.tail_bound, tol))
}

/// `ln 2π/12 + γ/12 − ζ′(2)/(2π²)` at the precision of `zeta_prime_2`.
pub fn ln_a_from_zeta_prime_2(zeta_prime_2: &BigReal) -> BigReal {
    let prec = zeta_prime_2.precision_bits();
    let c = FundamentalConstants::new(prec);
    (&c.ln_2pi + &c.euler_gamma).div_i64(12) - zeta_prime_2 / c.pi.square().mul_i64(2)
}

/// R4 with ζ′(2) from the Euler–Maclaurin evaluator.
pub fn ln_a_r4(tol: f64, prec: u32) -> Result<SeriesResult> {
    check_tol("ln_a_r4", tol)?;
    let wp = working_precision(prec, tol, 1);
    let two_pi2 = 2.0 * std::f64::consts::PI.powi(2);
    // an error ε in ζ′(2) moves ln A by ε/(2π²)
    let zp = zeta_prime_direct(&BigReal::from_i64(2, wp), tol * two_pi2 / 2.0)?;
    let value = ln_a_from_zeta_prime_2(&zp.value);
    Ok(SeriesResult::new(
        value.with_precision(prec),
        zp.terms_used,
        zp.tail_bound / two_pi2,
        tol,
    ))
}

/// Magnitude of the first omitted term `1/(720n²)` of the asymptotic
/// expansion. The derivatives of `x ln x` beyond the second are completely
/// monotone, so the expansion envelopes ln A and this bounds the error.
pub fn r5_tail_bound(n: u64) -> f64 {
    1.0 / (720.0 * (n as f64).powi(2))
}

fn r5_correction(n: u64, wp: u32) -> BigReal {
    let nn = BigReal::from_i64(n as i64, wp);
    let n2 = nn.square();
    let coeff = n2.div_i64(2) + nn.div_i64(2) + BigReal::from_ratio(1, 12, wp);
    n2.div_i64(4) - coeff * nn.ln()
}

/// R5 approximants for n = 1..=`n_max`.
pub fn r5_trace(n_max: u64, prec: u32) -> Result<Vec<TracePoint>> {
    positive("ln_a_r5", "n", n_max)?;
    let wp = working_precision(prec, 1.0, n_max) + (64 - n_max.leading_zeros());
    let mut sum = BigReal::zero(wp);
    let mut out = Vec::with_capacity(n_max as usize);
    for k in 1..=n_max {
        let kk = BigReal::from_i64(k as i64, wp);
        sum += &kk * kk.ln();
        out.push(TracePoint {
            k,
            value: (&sum + r5_correction(k, wp)).with_precision(prec),
            tail_bound: r5_tail_bound(k),
        });
    }
    Ok(out)
}

/// R5 at a single `n`; converged when `1/(720n²) ≤ tol`.
pub fn ln_a_r5(n: u64, tol: f64, prec: u32) -> Result<SeriesResult> {
    check_tol("ln_a_r5", tol)?;
    positive("ln_a_r5", "n", n)?;
    let wp = working_precision(prec, tol, n) + (64 - n.leading_zeros());
    let mut sum = BigReal::zero(wp);
    for k in 2..=n {
        let kk = BigReal::from_i64(k as i64, wp);
        sum += &kk * kk.ln();
    }
    let value = (sum + r5_correction(n, wp)).with_precision(prec);
    Ok(SeriesResult::new(value, n, r5_tail_bound(n), tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glaisher_reps::ln_a_reference;

    fn err(v: &BigReal, reference: &BigReal) -> f64 {
        (v - reference).abs().to_f64()
    }

    #[test]
    fn r3_error_within_bound() {
        let reference = ln_a_reference(128).value;
        for k in [10, 100] {
            let r = ln_a_r3(k, 1e-25, 128).unwrap();
            assert!(err(&r.value, &reference) <= r.tail_bound, "K = {k}");
        }
    }

    #[test]
    fn r3_trace_matches_single_evaluation() {
        let t = r3_trace(20, 1e-20, 96).unwrap();
        let r = ln_a_r3(20, 1e-20, 96).unwrap();
        assert_eq!(t.len(), 20);
        assert_eq!(t[19].value, r.value);
    }

    #[test]
    fn r4_reaches_tight_tolerance() {
        let reference = ln_a_reference(256).value;
        let r = ln_a_r4(1e-40, 192).unwrap();
        assert!(r.converged);
        assert!(err(&r.value, &reference) < 1e-40);
    }

    #[test]
    fn r5_error_tracks_leading_correction() {
        let reference = ln_a_reference(128).value;
        for n in [10u64, 100, 1000] {
            let r = ln_a_r5(n, 1.0, 128).unwrap();
            let e = err(&r.value, &reference);
            assert!(e <= r.tail_bound, "n = {n}");
            assert!(e >= 0.9 * r.tail_bound, "n = {n}");
        }
    }

    #[test]
    fn zero_terms_rejected() {
        assert!(ln_a_r3(0, 1e-10, 64).is_err());
        assert!(ln_a_r5(0, 1e-10, 64).is_err());
    }
}
