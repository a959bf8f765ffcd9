//! Six routes to ln A, the reference value they are judged against, and the
//! identity harness.
//!
//! | tag | formula |
//! |-----|---------|
//! | R1  | `1/12 − ζ′(−1)` with ζ′ from Apostol's formula |
//! | R2  | `ln 2/36 + ln π/6 + (−γ/4 + s)/3`, the reference |
//! | R3  | `1/4 + (1/(2π²)) Σ Ci(2kπ)/k²` |
//! | R4  | `ln 2π/12 + γ/12 − ζ′(2)/(2π²)` |
//! | R5  | hyperfactorial limit |
//! | R6  | hypergeometric series for ζ′(2) |

mod closed_forms;
mod identities;
mod oscillatory;
mod reference;
mod routes;
mod series2;

use std::fmt;
use std::str::FromStr;

pub use closed_forms::{
    boxed_constant, boxed_term, log_sine_moment, sine_moment, MomentInputs, SineMomentForm,
    PRINTED_TWO_F_THREE_COEFF, RECONCILED_TWO_F_THREE_COEFF,
};
pub use identities::{verify_identity, CorrectedForm, IdentityName, IdentityReport};
pub use oscillatory::{sine_weighted_integral, OscillatoryIntegral, Weight};
pub use reference::{ln_a_reference, ln_a_reference_trace};
pub use routes::{
    ln_a_from_zeta_prime_2, ln_a_r1, ln_a_r3, ln_a_r4, ln_a_r5, r3_tail_bound, r3_trace,
    r5_tail_bound, r5_trace,
};
pub use series2::{
    ln_a_r6, r6_tail_bound, reconciled_coefficient_deltas, CoefficientDelta, R6Outcome,
    R6_MAX_TERMS,
};

use crate::{BigReal, Error, QuadratureConfig, Result, SeriesResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Representation {
    R1ZetaPrimeNeg1,
    R2GlaisherProduct,
    R3CiSeries,
    R4ZetaPrime2,
    R5Hyperfactorial,
    R6HypergeometricSeries,
}

impl Representation {
    pub const ALL: [Representation; 6] = [
        Representation::R1ZetaPrimeNeg1,
        Representation::R2GlaisherProduct,
        Representation::R3CiSeries,
        Representation::R4ZetaPrime2,
        Representation::R5Hyperfactorial,
        Representation::R6HypergeometricSeries,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Representation::R1ZetaPrimeNeg1 => "R1_zeta_prime_neg1",
            Representation::R2GlaisherProduct => "R2_glaisher_product",
            Representation::R3CiSeries => "R3_ci_series",
            Representation::R4ZetaPrime2 => "R4_zeta_prime_2",
            Representation::R5Hyperfactorial => "R5_hyperfactorial",
            Representation::R6HypergeometricSeries => "R6_hypergeometric_series",
        }
    }

    pub fn short_name(&self) -> &'static str {
        &self.tag()[..2]
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Accepts `r3`, `R3` or the full tag.
impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Representation::ALL
            .into_iter()
            .find(|r| r.tag().eq_ignore_ascii_case(s) || r.short_name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                input: s.into(),
                reason: "expected r1..r6 or a full representation tag".into(),
            })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Series2Mode {
    Paper,
    #[default]
    Reconciled,
}

impl Series2Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Series2Mode::Paper => "paper",
            Series2Mode::Reconciled => "reconciled",
        }
    }
}

impl fmt::Display for Series2Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Series2Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paper" => Ok(Series2Mode::Paper),
            "reconciled" => Ok(Series2Mode::Reconciled),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected paper or reconciled".into(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Match,
    Mismatch,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One partial sum of a convergence trace.
#[derive(Clone, Debug)]
pub struct TracePoint {
    pub k: u64,
    pub value: BigReal,
    pub tail_bound: f64,
}

/// Settings shared by all routes.
#[derive(Clone, Debug)]
pub struct RouteOptions {
    pub precision_bits: u32,
    pub tolerance: f64,
    /// Upper limit on K for the series routes R3 and R6.
    pub max_terms: u64,
    /// n for R5.
    pub n: u64,
    pub quadrature: QuadratureConfig,
    pub series2_mode: Series2Mode,
}

impl Default for RouteOptions {
    fn default() -> Self {
        RouteOptions {
            precision_bits: 128,
            tolerance: 1e-10,
            max_terms: 10_000,
            n: 10_000,
            quadrature: QuadratureConfig::default(),
            series2_mode: Series2Mode::Reconciled,
        }
    }
}

/// Result of one route; `r6` carries the extra diagnostics of R6.
#[derive(Clone, Debug)]
pub struct RouteEvaluation {
    pub representation: Representation,
    pub result: SeriesResult,
    pub r6: Option<R6Outcome>,
}

/// Smallest K with `bound(K) ≤ tol`, searched up to `limit`.
fn terms_for(tol: f64, limit: u64, bound: impl Fn(u64) -> f64) -> u64 {
    if bound(limit) > tol {
        return limit;
    }
    let (mut lo, mut hi) = (1u64, limit);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if bound(mid) <= tol {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// K used by R3: enough for `tol` when that is at most `max_terms`.
pub fn r3_terms(tol: f64, max_terms: u64) -> u64 {
    terms_for(tol, max_terms.max(1), |k| r3_tail_bound(k) + tol / 12.0)
}

/// K used by R6: enough for `tol` when that is at most `max_terms`.
pub fn r6_terms(tol: f64, max_terms: u64) -> u64 {
    terms_for(tol, max_terms.max(1), |k| r6_tail_bound(k) + tol / 16.0)
}

pub fn evaluate(rep: Representation, opts: &RouteOptions) -> Result<RouteEvaluation> {
    let prec = opts.precision_bits;
    let tol = opts.tolerance;
    crate::check_tol("evaluate", tol)?;
    let mut r6 = None;
    let result = match rep {
        Representation::R1ZetaPrimeNeg1 => ln_a_r1(&opts.quadrature, tol, prec)?,
        Representation::R2GlaisherProduct => ln_a_reference(prec),
        Representation::R3CiSeries => ln_a_r3(r3_terms(tol, opts.max_terms), tol, prec)?,
        Representation::R4ZetaPrime2 => ln_a_r4(tol, prec)?,
        Representation::R5Hyperfactorial => ln_a_r5(opts.n, tol, prec)?,
        Representation::R6HypergeometricSeries => {
            let outcome = ln_a_r6(
                r6_terms(tol, opts.max_terms),
                opts.series2_mode,
                tol,
                prec,
            )?;
            let result = outcome.result.clone();
            r6 = Some(outcome);
            result
        }
    };
    Ok(RouteEvaluation {
        representation: rep,
        result,
        r6,
    })
}

/// Partial sums for k in `from..=to` (quadrature cell counts for R1,
/// s-series index for R2). R4 has no natural index and is rejected.
pub fn convergence_trace(
    rep: Representation,
    from: u64,
    to: u64,
    opts: &RouteOptions,
) -> Result<Vec<TracePoint>> {
    if from == 0 || from > to {
        return Err(Error::Config(format!("empty or invalid range {from}..{to}")));
    }
    let prec = opts.precision_bits;
    let tol = opts.tolerance;
    let keep = |points: Vec<TracePoint>| -> Vec<TracePoint> {
        points.into_iter().filter(|p| p.k >= from && p.k <= to).collect()
    };
    match rep {
        Representation::R1ZetaPrimeNeg1 => {
            let mut out = Vec::new();
            let mut n = from.max(QuadratureConfig::MIN_INTERVALS);
            while n <= to {
                let cfg = QuadratureConfig::new(n, opts.quadrature.nodes_per_interval)?;
                let r = ln_a_r1(&cfg, tol, prec)?;
                out.push(TracePoint {
                    k: n,
                    value: r.value,
                    tail_bound: r.tail_bound,
                });
                n *= 2;
            }
            Ok(out)
        }
        Representation::R2GlaisherProduct => {
            let r_max = u32::try_from(to).map_err(|_| Error::Config("range too large".into()))?;
            Ok(ln_a_reference_trace(r_max, prec)
                .into_iter()
                .zip(2u64..)
                .filter(|(_, r)| *r >= from && *r <= to)
                .map(|((value, tail_bound), k)| TracePoint {
                    k,
                    value,
                    tail_bound,
                })
                .collect())
        }
        Representation::R3CiSeries => Ok(keep(r3_trace(to, tol, prec)?)),
        Representation::R4ZetaPrime2 => Err(Error::Config(
            "R4 has no series index; use compute for R4".into(),
        )),
        Representation::R5Hyperfactorial => Ok(keep(r5_trace(to, prec)?)),
        Representation::R6HypergeometricSeries => {
            Ok(keep(ln_a_r6(to, opts.series2_mode, tol, prec)?.trace))
        }
    }
}
