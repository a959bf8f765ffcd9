//! `∫₁^∞ sin(2kπx) h(x) dx` for slowly decaying, eventually convex `h`.
//!
//! The range `[1, X]` (X an integer) is cut at the zeros of the sine into
//! cells of width `1/(2k)`, each integrated with a fixed Gauss rule. On cell
//! `j` the sine is `(−1)^j sin(πt)`, so it is evaluated only at the rule's
//! nodes. The remainder beyond `X` is
//!
//! ```text
//! ∫_X^∞ sin(ax) h = h(X)/a − (1/a²) ∫_X^∞ sin(ax) h″,   |second term| ≤ 2h″(X)/a³
//! ```
//!
//! whenever `h″` is positive and decreasing on `[X, ∞)`.

use crate::quadrature::GaussRule;
use crate::{check_tol, BigReal, FundamentalConstants, Result};

const NODES: usize = 16;
const CHECK_NODES: usize = 24;
const GUARD_BITS: u32 = 32;
/// Upper end beyond which the adaptive search gives up.
const MAX_UPPER: u64 = 1 << 20;

/// Non-oscillatory factor of the integrand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// `x^{−ν}`
    InversePower(u32),
    /// `ln x · x^{−ν}`
    LogInversePower(u32),
}

impl Weight {
    fn value(&self, x: &BigReal) -> BigReal {
        match *self {
            Weight::InversePower(nu) => x.powi(-(nu as i32)),
            Weight::LogInversePower(nu) => x.ln() * x.powi(-(nu as i32)),
        }
    }

    fn second_derivative(&self, x: f64) -> f64 {
        match *self {
            Weight::InversePower(nu) => {
                let nu = f64::from(nu);
                nu * (nu + 1.0) * x.powf(-nu - 2.0)
            }
            Weight::LogInversePower(nu) => {
                let nu = f64::from(nu);
                x.powf(-nu - 2.0) * (nu * (nu + 1.0) * x.ln() - (2.0 * nu + 1.0))
            }
        }
    }

    /// Smallest integer `X ≥ 1` past which `h″` is positive and decreasing.
    fn convex_from(&self) -> u64 {
        match *self {
            Weight::InversePower(_) => 1,
            Weight::LogInversePower(nu) => {
                let nu = f64::from(nu);
                let a = nu * (nu + 1.0);
                let b = 2.0 * nu + 1.0;
                let ln_x = ((a + (nu + 2.0) * b) / ((nu + 2.0) * a)).max(b / a);
                ln_x.exp().ceil() as u64
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct OscillatoryIntegral {
    pub value: BigReal,
    /// Bound on the truncation remainder plus an estimate of the Gauss error.
    pub error_bound: f64,
    pub upper: u64,
    pub cells: u64,
}

struct CellRule {
    nodes: Vec<BigReal>,
    weights: Vec<BigReal>,
}

impl CellRule {
    fn new(n: usize, wp: u32, pi: &BigReal) -> Self {
        let rule = GaussRule::unit_interval(n, wp);
        let weights = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(t, w)| w * (pi * t).sin())
            .collect();
        CellRule {
            nodes: rule.nodes,
            weights,
        }
    }

    /// `∫` over cell `j` of `|sin|·h`, before the `(−1)^j` sign and width.
    fn cell(&self, j: u64, two_k: u64, weight: Weight, wp: u32) -> BigReal {
        let base = BigReal::from_i64((two_k + j) as i64, wp);
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(BigReal::zero(wp), |acc, (t, w)| {
                let x = (&base + t).div_i64(two_k as i64);
                acc + w * weight.value(&x)
            })
    }
}

/// `∫₁^∞ sin(2kπx) h(x) dx` to relative accuracy about `rel_tol/4`.
pub fn sine_weighted_integral(
    k: u64,
    weight: Weight,
    rel_tol: f64,
    prec: u32,
) -> Result<OscillatoryIntegral> {
    check_tol("sine_weighted_integral", rel_tol)?;
    let wp = prec + GUARD_BITS;
    let consts = FundamentalConstants::new(wp);
    let a = consts.pi.mul_i64(2 * k as i64);
    let a_f = a.to_f64();
    let two_k = 2 * k;
    let rule = CellRule::new(NODES, wp, &consts.pi);

    let check = CellRule::new(CHECK_NODES, wp, &consts.pi);
    let gauss_error = (rule.cell(0, two_k, weight, wp) - check.cell(0, two_k, weight, wp))
        .abs()
        .to_f64();

    let mut sum = BigReal::zero(wp);
    let mut cells = 0u64;
    let mut upper = weight.convex_from().max(2);
    loop {
        while cells < (upper - 1) * two_k {
            let c = rule.cell(cells, two_k, weight, wp);
            if cells.is_multiple_of(2) {
                sum += c;
            } else {
                sum -= c;
            }
            cells += 1;
        }
        let x = BigReal::from_i64(upper as i64, wp);
        let value = sum.div_i64(two_k as i64) + weight.value(&x) / &a;
        let remainder = 2.0 * weight.second_derivative(upper as f64) / a_f.powi(3);
        let error_bound = remainder + gauss_error * cells as f64 / two_k as f64;
        if error_bound <= rel_tol / 4.0 * value.abs().to_f64() || upper >= MAX_UPPER {
            return Ok(OscillatoryIntegral {
                value: value.with_precision(prec),
                error_bound,
                upper,
                cells,
            });
        }
        upper *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_over_x_squared_matches_cosine_integral() {
        let q = sine_weighted_integral(1, Weight::InversePower(2), 1e-10, 128).unwrap();
        let pi = crate::constants::pi(128);
        let ci = crate::special_functions::ci_at_2kpi(1, 1e-30, 128).unwrap();
        let exact = -(pi.mul_i64(2) * ci);
        let err = (&q.value - exact).abs().to_f64();
        assert!(err <= q.error_bound, "{err} > {}", q.error_bound);
        assert!(q.error_bound <= 1e-10 / 4.0 * q.value.abs().to_f64());
    }

    #[test]
    fn convexity_start_for_log_weight() {
        assert_eq!(Weight::LogInversePower(5).convex_from(), 2);
        assert!(Weight::LogInversePower(5).second_derivative(2.0) > 0.0);
    }
}
