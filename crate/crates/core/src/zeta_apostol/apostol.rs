use crate::quadrature::GaussRule;
use crate::{BigReal, Error, Result, SeriesResult};

/// Piecewise Gauss quadrature over `[1, N+1]`, one cell per unit interval.
///
/// On each `[n, n+1]` the periodic Bernoulli function is the cubic `B₃(x−n)`,
/// so the integrand is smooth cell by cell and a fixed-order rule converges
/// spectrally. The contribution of `[N+1, ∞)` is bounded analytically.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureConfig {
    /// Number of unit cells `N`.
    pub intervals: u64,
    pub nodes_per_interval: usize,
    /// `s + 3` must exceed this for the tail bound to be finite.
    pub tail_exponent_floor: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            intervals: 10_000,
            nodes_per_interval: 16,
            tail_exponent_floor: 1.0,
        }
    }
}

impl QuadratureConfig {
    pub const MIN_INTERVALS: u64 = 16;
    pub const MIN_NODES: usize = 8;

    pub fn new(intervals: u64, nodes_per_interval: usize) -> Result<Self> {
        let cfg = QuadratureConfig {
            intervals,
            nodes_per_interval,
            ..Default::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_intervals(intervals: u64) -> Result<Self> {
        Self::new(intervals, 16)
    }

    pub fn validate(&self) -> Result<()> {
        if self.intervals < Self::MIN_INTERVALS {
            return Err(Error::Config(format!(
                "quadrature needs at least {} intervals, got {}",
                Self::MIN_INTERVALS,
                self.intervals
            )));
        }
        if self.nodes_per_interval < Self::MIN_NODES {
            return Err(Error::Config(format!(
                "quadrature needs at least {} nodes per interval, got {}",
                Self::MIN_NODES,
                self.nodes_per_interval
            )));
        }
        Ok(())
    }

    /// Left end of the untreated tail, `N + 1`.
    fn tail_start(&self) -> f64 {
        self.intervals as f64 + 1.0
    }
}

/// max |B₃(t)| on [0, 1]
const B3_MAX: f64 = 0.048_112_522_432_468_82; // √3/36

/// Bounds on `|∫_M^∞ P₃(x) x^{-σ} dx|` and `|∫_M^∞ P₃(x) ln x · x^{-σ} dx|`,
/// `σ = s + 3`, `M = N + 1`.
///
/// Two rigorous bounds are available and the smaller is reported. The
/// envelope bound replaces |P₃| by max|B₃| = √3/36. The second integrates by
/// parts once against P₄ = B₄({x}) (P₄′ = 4P₃, max|B₄| = 1/30, B₄(0) = −1/30),
/// leaving `h(M)/60` for any weight `h` decreasing to zero on `[M, ∞)`.
fn tail_bounds(s: f64, cfg: &QuadratureConfig) -> (f64, f64) {
    let m = cfg.tail_start();
    let a = s + 2.0;
    let sigma = s + 3.0;
    let ln_m = m.ln();
    let envelope = B3_MAX * m.powf(-a) / a;
    let envelope_log = envelope * (ln_m + 1.0 / a);
    let by_parts = m.powf(-sigma) / 60.0;
    let by_parts_log = ln_m * m.powf(-sigma) / 60.0;
    (envelope.min(by_parts), envelope_log.min(by_parts_log))
}

fn check_domain(function: &'static str, s: &BigReal, cfg: &QuadratureConfig) -> Result<()> {
    cfg.validate()?;
    let sf = s.to_f64();
    if !s.is_finite() || sf + 3.0 <= cfg.tail_exponent_floor || *s <= -2.0 {
        return Err(Error::Domain {
            function,
            argument: format!("s = {}", s.to_scientific_string(20)),
            domain: "s > -2",
        });
    }
    Ok(())
}

struct CellSums {
    plain: Option<BigReal>,
    log_weighted: Option<BigReal>,
}

/// Accumulates `Σ_cells Σ_nodes w_j B₃(t_j) x^{−σ}` (and the `−ln x` weighted
/// variant) in ascending cell order.
fn integrate_cells(s: &BigReal, cfg: &QuadratureConfig, plain: bool, log: bool) -> CellSums {
    let prec = s.precision_bits();
    let cells_bits = 64 - (cfg.intervals * cfg.nodes_per_interval as u64).leading_zeros();
    let wp = prec + cells_bits + 24;
    let rule = GaussRule::unit_interval(cfg.nodes_per_interval, wp);
    let bernoulli_weights: Vec<BigReal> = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(t, w)| w * crate::special_functions::p3_closed(t))
        .collect();

    let sigma = s.with_precision(wp) + BigReal::from_i64(3, wp);
    let integer_sigma = if sigma.is_integer() && sigma.abs() < 1.0e6 {
        Some(sigma.to_f64() as i32)
    } else {
        None
    };

    let mut plain_sum = BigReal::zero(wp);
    let mut log_sum = BigReal::zero(wp);
    for n in 1..=cfg.intervals {
        let base = BigReal::from_i64(n as i64, wp);
        let mut cell_plain = BigReal::zero(wp);
        let mut cell_log = BigReal::zero(wp);
        for (t, bw) in rule.nodes.iter().zip(&bernoulli_weights) {
            let x = &base + t;
            let ln_x = if log || integer_sigma.is_none() {
                Some(x.ln())
            } else {
                None
            };
            let weight = match (integer_sigma, &ln_x) {
                (Some(p), _) => x.powi(-p),
                (None, Some(l)) => (-(&sigma * l)).exp(),
                (None, None) => unreachable!(),
            };
            let contribution = bw * &weight;
            if log {
                if let Some(l) = &ln_x {
                    cell_log -= &contribution * l;
                }
            }
            if plain {
                cell_plain += &contribution;
            }
        }
        plain_sum += &cell_plain;
        log_sum += &cell_log;
    }
    CellSums {
        plain: plain.then(|| plain_sum.with_precision(prec)),
        log_weighted: log.then(|| log_sum.with_precision(prec)),
    }
}

/// `I₃(s) = ∫₁^∞ P₃(x)/x^{s+3} dx` at the precision of `s`.
pub fn i3(s: &BigReal, cfg: &QuadratureConfig) -> Result<SeriesResult> {
    check_domain("i3", s, cfg)?;
    let sums = integrate_cells(s, cfg, true, false);
    let (tail, _) = tail_bounds(s.to_f64(), cfg);
    let value = sums.plain.expect("plain sum requested");
    Ok(SeriesResult::new(value, cfg.intervals, tail, f64::INFINITY))
}

/// `I₃′(s) = −∫₁^∞ P₃(x) ln x / x^{s+3} dx` at the precision of `s`.
pub fn i3_prime(s: &BigReal, cfg: &QuadratureConfig) -> Result<SeriesResult> {
    check_domain("i3_prime", s, cfg)?;
    let sums = integrate_cells(s, cfg, false, true);
    let (_, tail) = tail_bounds(s.to_f64(), cfg);
    let value = sums.log_weighted.expect("log-weighted sum requested");
    Ok(SeriesResult::new(value, cfg.intervals, tail, f64::INFINITY))
}

/// ζ′(x) assembled from Apostol's formula, with its ingredients.
#[derive(Clone, Debug)]
pub struct ApostolEvaluation {
    pub value: BigReal,
    /// Quadrature tail contribution, weighted by the formula's coefficients.
    pub tail_bound: f64,
    pub i3: SeriesResult,
    /// `None` when the coefficient `x(x+1)(x+2)/6` vanishes (x = 0, −1).
    pub i3_prime: Option<SeriesResult>,
}

pub fn zeta_prime_apostol(x: &BigReal, cfg: &QuadratureConfig) -> Result<ApostolEvaluation> {
    if *x == 1.0 {
        return Err(Error::Pole {
            function: "zeta_prime_apostol",
            x: "1".into(),
        });
    }
    check_domain("zeta_prime_apostol", x, cfg)?;
    let prec = x.precision_bits();
    let one = BigReal::one(prec);
    let two = BigReal::from_i64(2, prec);
    let log_coeff = (x * (x + &one) * (x + &two)).div_i64(6);
    let plain_coeff = (x.square().mul_i64(3) + x.mul_i64(6) + &two).div_i64(6);

    let need_log = !log_coeff.is_zero();
    let sums = integrate_cells(x, cfg, true, need_log);
    let (tail, tail_log) = tail_bounds(x.to_f64(), cfg);
    let i3 = SeriesResult::new(
        sums.plain.expect("plain sum requested"),
        cfg.intervals,
        tail,
        f64::INFINITY,
    );
    let i3_prime = sums
        .log_weighted
        .map(|v| SeriesResult::new(v, cfg.intervals, tail_log, f64::INFINITY));

    let pole = (x - &one).square().recip();
    let mut value = BigReal::from_ratio(1, 12, prec) - pole - &plain_coeff * &i3.value;
    let mut tail_bound = plain_coeff.abs().to_f64() * i3.tail_bound;
    if let Some(ip) = &i3_prime {
        value -= &log_coeff * &ip.value;
        tail_bound += log_coeff.abs().to_f64() * ip.tail_bound;
    }
    Ok(ApostolEvaluation {
        value,
        tail_bound,
        i3,
        i3_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: u64) -> QuadratureConfig {
        QuadratureConfig::with_intervals(n).unwrap()
    }

    #[test]
    fn config_limits() {
        assert!(QuadratureConfig::new(15, 16).is_err());
        assert!(QuadratureConfig::new(16, 7).is_err());
        assert!(QuadratureConfig::new(16, 8).is_ok());
    }

    #[test]
    fn domain_and_pole() {
        let c = cfg(16);
        assert!(matches!(i3(&BigReal::from_f64(-2.0, 128), &c), Err(Error::Domain { .. })));
        assert!(matches!(i3_prime(&BigReal::from_f64(-2.5, 128), &c), Err(Error::Domain { .. })));
        assert!(matches!(
            zeta_prime_apostol(&BigReal::one(128), &c),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            zeta_prime_apostol(&BigReal::from_f64(-3.0, 128), &c),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn envelope_bounds_at_large_s() {
        let s = BigReal::from_i64(10, 128);
        let c = cfg(64);
        let root3_over_36 = 3f64.sqrt() / 36.0;
        assert!(i3(&s, &c).unwrap().value.abs().to_f64() <= root3_over_36 / 12.0);
        assert!(i3_prime(&s, &c).unwrap().value.abs().to_f64() <= root3_over_36 / 144.0);
    }

    #[test]
    fn short_circuit_at_minus_one_and_zero() {
        let c = cfg(64);
        for x in [-1.0, 0.0] {
            let e = zeta_prime_apostol(&BigReal::from_f64(x, 128), &c).unwrap();
            assert!(e.i3_prime.is_none());
        }
        let e = zeta_prime_apostol(&BigReal::from_f64(2.0, 128), &c).unwrap();
        assert!(e.i3_prime.is_some());
    }

    #[test]
    fn zeta_prime_at_zero_is_minus_half_ln_2pi() {
        let e = zeta_prime_apostol(&BigReal::zero(128), &cfg(2000)).unwrap();
        let expected = -crate::constants::ln_2pi_computed(128).mul_pow2(-1);
        let err = (&e.value - &expected).abs().to_f64();
        assert!(err <= e.tail_bound, "{err} > {}", e.tail_bound);
        assert!(err < 1e-9);
    }

    #[test]
    fn i3_prime_refinement_is_self_consistent() {
        let s = BigReal::from_i64(-1, 128);
        let a = i3_prime(&s, &cfg(2500)).unwrap();
        let b = i3_prime(&s, &cfg(5000)).unwrap();
        let gap = (a.value - b.value).abs().to_f64();
        assert!(gap <= a.tail_bound + b.tail_bound);
    }

    #[test]
    fn non_integer_exponent_path_matches_integer_path_nearby() {
        // s = 2 (integer powers) against s = 2 + 2^-100 (exp/ln path)
        let c = cfg(64);
        let a = i3(&BigReal::from_i64(2, 128), &c).unwrap();
        let s = BigReal::from_i64(2, 128) + BigReal::one(128).mul_pow2(-100);
        let b = i3(&s, &c).unwrap();
        assert!((a.value - b.value).abs() < 1e-28);
    }
}
