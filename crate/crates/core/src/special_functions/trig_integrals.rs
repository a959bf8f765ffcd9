//! Cosine and sine integrals.
//!
//! Small arguments use the convergent power series
//!
//! ```text
//! Ci(z) = γ + ln z + Σ_{k≥1} (−z²)^k / (2k (2k)!)
//! Si(z) = Σ_{k≥0} (−1)^k z^{2k+1} / ((2k+1)² (2k)!)
//! ```
//!
//! (the Si denominator `(2k+1)²(2k)!` equals `(2k+1)(2k+1)!`). Large
//! arguments use the auxiliary functions `f`, `g`:
//!
//! ```text
//! Ci(z) = f(z) sin z − g(z) cos z
//! Si(z) = π/2 − f(z) cos z − g(z) sin z
//! f(z) ~ (1/z)  Σ (−1)^n (2n)!   / z^{2n}
//! g(z) ~ (1/z²) Σ (−1)^n (2n+1)! / z^{2n}
//! ```
//!
//! Both expansions are enveloping: the error after any term is bounded by the
//! first omitted term. They are truncated at their smallest term. When that
//! term is still larger than the requested tolerance the power series takes
//! over, at whatever precision its cancellation requires.

use crate::constants;
use crate::special_functions::round_to_output;
use crate::{bits_for_tol, check_tol, BigReal, Error, Result, SeriesResult};

/// Arguments at or below this use the power series outright.
pub const TRIG_CROSSOVER: f64 = 32.0;

const GUARD_BITS: u32 = 32;

fn check_positive(function: &'static str, z: &BigReal, allow_zero: bool) -> Result<()> {
    let ok = z.is_finite() && (z > &0.0 || (allow_zero && z.is_zero()));
    if ok {
        Ok(())
    } else {
        Err(Error::Domain {
            function,
            argument: format!("z = {}", z.to_scientific_string(20)),
            domain: if allow_zero { "z >= 0" } else { "z > 0" },
        })
    }
}

/// Working precision for an alternating power series whose largest term is
/// below `e^z`.
fn series_precision(z: f64, prec: u32, tol: f64) -> u32 {
    let cancellation = (z.max(0.0) * std::f64::consts::LOG2_E).ceil() as u32;
    prec.max(bits_for_tol(tol)) + cancellation + GUARD_BITS
}

/// Sums `Σ_{k≥k0} term_k` of an alternating series whose magnitudes decrease
/// once `k` passes `peak`; stops when the next term is below `tol/8`.
/// Returns `(sum, terms, bound on the remainder)`.
fn alternating_tail(
    mut next_term: impl FnMut(u64) -> BigReal,
    peak: f64,
    tol: f64,
    prec: u32,
) -> (BigReal, u64, f64) {
    let mut sum = BigReal::zero(prec);
    let mut k = 0u64;
    loop {
        let term = next_term(k);
        let past_peak = k as f64 > peak + 1.0;
        if past_peak && term.abs().to_f64() < tol / 8.0 {
            return (sum, k, term.abs().to_f64());
        }
        sum += &term;
        k += 1;
    }
}

/// Power-series evaluation of Ci(z).
pub fn ci_series(z: &BigReal, tol: f64) -> Result<SeriesResult> {
    check_positive("ci", z, false)?;
    check_tol("ci", tol)?;
    let zf = z.to_f64();
    let wp = series_precision(zf, z.precision_bits(), tol);
    let z = z.with_precision(wp);
    let neg_z2 = -z.square();
    let mut u = BigReal::one(wp);
    let (sum, terms, bound) = alternating_tail(
        |k| {
            // u_k = (−z²)^k / (2k)!, term = u_k / (2k), summation starts at k = 1
            let k = k as i64 + 1;
            u = (&u * &neg_z2).div_i64((2 * k - 1) * (2 * k));
            u.div_i64(2 * k)
        },
        zf / 2.0,
        tol,
        wp,
    );
    let value = constants::euler_gamma(wp) + z.ln() + sum;
    Ok(SeriesResult::new(value, terms, bound, tol))
}

/// Power-series evaluation of Si(z).
pub fn si_series(z: &BigReal, tol: f64) -> Result<SeriesResult> {
    check_positive("si", z, true)?;
    check_tol("si", tol)?;
    if z.is_zero() {
        return Ok(SeriesResult::new(BigReal::zero(z.precision_bits()), 0, 0.0, tol));
    }
    let zf = z.to_f64();
    let wp = series_precision(zf, z.precision_bits(), tol);
    let z = z.with_precision(wp);
    let neg_z2 = -z.square();
    let mut v = z.clone();
    let (sum, terms, bound) = alternating_tail(
        |k| {
            // v_k = (−1)^k z^{2k+1} / (2k+1)!, term = v_k / (2k+1)
            let k = k as i64;
            if k > 0 {
                v = (&v * &neg_z2).div_i64((2 * k) * (2 * k + 1));
            }
            v.div_i64(2 * k + 1)
        },
        zf / 2.0,
        tol,
        wp,
    );
    Ok(SeriesResult::new(sum, terms, bound, tol))
}

/// Truncated asymptotic expansions of the auxiliary functions `f` and `g`.
#[derive(Clone, Debug)]
pub struct AuxiliaryExpansion {
    pub f: BigReal,
    pub g: BigReal,
    /// First omitted term of each expansion; a rigorous error bound.
    pub f_bound: f64,
    pub g_bound: f64,
    pub terms: u64,
}

/// Sums `(1/z^offset) Σ (−1)^n c_n / z^{2n}` where `c_n / c_{n−1} = ratio(n)`,
/// stopping at the smallest term or once terms drop below `tol/8`.
fn enveloping_sum(
    z: &BigReal,
    first: BigReal,
    ratio: impl Fn(i64) -> i64,
    tol: f64,
) -> (BigReal, f64, u64) {
    let inv_z2 = z.square().recip();
    let mut term = first;
    let mut sum = BigReal::zero(z.precision_bits());
    let mut n = 0i64;
    loop {
        let next = -(&term * &inv_z2).mul_i64(ratio(n + 1));
        sum += &term;
        n += 1;
        let next_mag = next.abs();
        if next_mag.to_f64() < tol / 8.0 || next_mag >= term.abs() {
            return (sum, next_mag.to_f64(), n as u64);
        }
        term = next;
    }
}

/// Asymptotic `f(z)`, `g(z)` truncated at their smallest terms (or earlier,
/// once a term falls below `tol/8`).
pub fn auxiliary_fg(z: &BigReal, tol: f64) -> Result<AuxiliaryExpansion> {
    check_positive("auxiliary_fg", z, false)?;
    check_tol("auxiliary_fg", tol)?;
    let wp = z.precision_bits() + GUARD_BITS;
    let z = z.with_precision(wp);
    let inv_z = z.recip();
    let (f, f_bound, f_terms) =
        enveloping_sum(&z, inv_z.clone(), |n| (2 * n - 1) * (2 * n), tol);
    let (g, g_bound, g_terms) = enveloping_sum(&z, inv_z.square(), |n| (2 * n) * (2 * n + 1), tol);
    Ok(AuxiliaryExpansion {
        f,
        g,
        f_bound,
        g_bound,
        terms: f_terms.max(g_terms),
    })
}

/// Ci(z) from the auxiliary expansions; `converged` reports whether the
/// smallest terms met `tol`.
pub fn ci_asymptotic(z: &BigReal, tol: f64) -> Result<SeriesResult> {
    let aux = auxiliary_fg(z, tol)?;
    let zw = z.with_precision(aux.f.precision_bits());
    let value = &aux.f * zw.sin() - &aux.g * zw.cos();
    Ok(SeriesResult::new(value, aux.terms, aux.f_bound + aux.g_bound, tol / 2.0))
}

/// Si(z) from the auxiliary expansions.
pub fn si_asymptotic(z: &BigReal, tol: f64) -> Result<SeriesResult> {
    let aux = auxiliary_fg(z, tol)?;
    let wp = aux.f.precision_bits();
    let zw = z.with_precision(wp);
    let half_pi = constants::pi(wp).mul_pow2(-1);
    let value = half_pi - &aux.f * zw.cos() - &aux.g * zw.sin();
    Ok(SeriesResult::new(value, aux.terms, aux.f_bound + aux.g_bound, tol / 2.0))
}

/// Cosine integral `Ci(z) = −∫_z^∞ cos t / t dt` to absolute accuracy `tol`,
/// returned at the precision of `z`.
pub fn ci(z: &BigReal, tol: f64) -> Result<BigReal> {
    check_positive("ci", z, false)?;
    check_tol("ci", tol)?;
    let value = if z.to_f64() <= TRIG_CROSSOVER {
        ci_series(z, tol)?.value
    } else {
        let asym = ci_asymptotic(z, tol)?;
        if asym.converged {
            asym.value
        } else {
            ci_series(z, tol)?.value
        }
    };
    round_to_output("ci", value, z.precision_bits(), tol)
}

/// Sine integral `Si(z) = ∫_0^z sin t / t dt` to absolute accuracy `tol`.
pub fn si(z: &BigReal, tol: f64) -> Result<BigReal> {
    check_positive("si", z, true)?;
    check_tol("si", tol)?;
    let value = if z.to_f64() <= TRIG_CROSSOVER {
        si_series(z, tol)?.value
    } else {
        let asym = si_asymptotic(z, tol)?;
        if asym.converged {
            asym.value
        } else {
            si_series(z, tol)?.value
        }
    };
    round_to_output("si", value, z.precision_bits(), tol)
}

/// Ci(2kπ) at `prec` bits.
///
/// With `sin(2kπ) = 0` and `cos(2kπ) = 1` this is just `−g(2kπ)`; when the
/// smallest term of `g` is not below `tol/2` the general [`ci`] is used.
pub fn ci_at_2kpi(k: u64, tol: f64, prec: u32) -> Result<BigReal> {
    check_tol("ci_at_2kpi", tol)?;
    if k == 0 {
        return Err(Error::Domain {
            function: "ci_at_2kpi",
            argument: "k = 0".into(),
            domain: "k >= 1",
        });
    }
    let wp = prec + 64 - k.leading_zeros() + 8;
    let z = constants::pi(wp).mul_i64(2 * k as i64);
    if z.to_f64() > TRIG_CROSSOVER {
        let inv_z2 = z.square().recip();
        let (g, bound, _) = enveloping_sum(&z, inv_z2, |n| (2 * n) * (2 * n + 1), tol);
        if bound <= tol / 2.0 {
            return round_to_output("ci_at_2kpi", -g, prec, tol);
        }
    }
    let value = ci(&z, tol)?;
    round_to_output("ci_at_2kpi", value, prec, tol)
}
