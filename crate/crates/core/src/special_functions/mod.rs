//! Scalar building blocks: the periodic Bernoulli function P₃, the cosine and
//! sine integrals, and generalized hypergeometric series.
//!
//! Tolerances are absolute throughout. Each routine works internally at
//! whatever precision its cancellation demands and rounds the result back to
//! the precision of its argument.

mod bernoulli;
mod hypergeometric;
mod trig_integrals;

pub use bernoulli::{p3_closed, p3_fourier};
pub use hypergeometric::{hyp_pfq, hyp_pfq_with_ceiling, PfqParams, DEFAULT_PFQ_CEILING_BITS};
pub use trig_integrals::{
    auxiliary_fg, ci, ci_asymptotic, ci_at_2kpi, ci_series, si, si_asymptotic, si_series,
    AuxiliaryExpansion, TRIG_CROSSOVER,
};

use crate::{BigReal, Error, Result};

/// Rounds a value computed at elevated precision back to `prec` bits, failing
/// when the rounding error alone would exceed `tol`.
pub(crate) fn round_to_output(
    function: &'static str,
    value: BigReal,
    prec: u32,
    tol: f64,
) -> Result<BigReal> {
    let rounded = value.with_precision(prec);
    if let Some(exp) = rounded.exponent() {
        // half an ulp is at most 2^(exp - prec)
        let rounding_log2 = f64::from(exp) - f64::from(prec);
        if rounding_log2 > (tol / 2.0).log2() {
            let required = (f64::from(exp) - (tol / 2.0).log2()).ceil().max(1.0) as u32;
            return Err(Error::Precision {
                function,
                required_bits: required.max(crate::bigreal::MIN_PRECISION_BITS),
                detail: format!(" (result magnitude ~2^{exp}, tol {tol:e})"),
            });
        }
    }
    Ok(rounded)
}
