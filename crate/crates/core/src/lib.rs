//! High-precision computation of ln A, the logarithm of the Glaisher–Kinkelin
//! constant, through six independent routes, together with the special
//! functions and zeta-derivative machinery those routes need and a harness
//! that checks printed closed forms against oscillatory quadrature.
//!
//! All numbers flow through [`BigReal`]; every summation returns a
//! [`SeriesResult`] carrying the value, the number of terms used and an
//! absolute error bound.

pub mod bigreal;
pub mod constants;
pub mod glaisher_reps;
pub mod quadrature;
pub mod special_functions;
pub mod zeta_apostol;

pub use bigreal::BigReal;
pub use constants::FundamentalConstants;
pub use glaisher_reps::{IdentityName, IdentityReport, Representation, Series2Mode, Verdict};
pub use zeta_apostol::QuadratureConfig;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function}: argument {argument} outside domain ({domain})")]
    Domain {
        function: &'static str,
        argument: String,
        domain: &'static str,
    },
    #[error("{function}: pole at x = {x}")]
    Pole { function: &'static str, x: String },
    #[error("{function}: tolerance not reachable, needs {required_bits} bits{detail}")]
    Precision {
        function: &'static str,
        required_bits: u32,
        detail: String,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Outcome of a truncated summation, quadrature or asymptotic expansion.
#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: BigReal,
    /// Number of series terms (or quadrature cells) actually accumulated.
    pub terms_used: u64,
    /// Absolute bound on the truncation error.
    pub tail_bound: f64,
    /// Whether `tail_bound` met the tolerance requested by the caller.
    pub converged: bool,
}

impl SeriesResult {
    pub fn new(value: BigReal, terms_used: u64, tail_bound: f64, tol: f64) -> Self {
        SeriesResult {
            value,
            terms_used,
            tail_bound,
            converged: tail_bound.is_finite() && tail_bound <= tol,
        }
    }
}

/// Checks that `tol` is a positive finite number.
pub(crate) fn check_tol(function: &'static str, tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            function,
            argument: format!("tol = {tol}"),
            domain: "tol > 0",
        })
    }
}

/// `ceil(log2(1/tol))`, clamped to be non-negative.
pub(crate) fn bits_for_tol(tol: f64) -> u32 {
    (-tol.log2()).ceil().max(0.0) as u32
}
