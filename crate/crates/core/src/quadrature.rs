//! Gauss–Legendre rules at arbitrary precision.

use crate::BigReal;

/// Nodes and weights of an `n`-point Gauss–Legendre rule mapped to `[0, 1]`.
#[derive(Clone, Debug)]
pub struct GaussRule {
    pub nodes: Vec<BigReal>,
    pub weights: Vec<BigReal>,
}

impl GaussRule {
    /// Builds the rule by Newton iteration on `P_n` at `prec` bits, seeded
    /// from the usual cosine approximation of the roots.
    pub fn unit_interval(n: usize, prec: u32) -> Self {
        assert!(n >= 1, "Gauss rule needs at least one node");
        let work = prec + 32;
        let mut nodes = vec![BigReal::zero(prec); n];
        let mut weights = vec![BigReal::zero(prec); n];
        let one = BigReal::one(work);
        let stop_exp = -(work as i32) + 4;

        for i in 0..n.div_ceil(2) {
            let seed = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut x = BigReal::from_f64(seed, work);
            let mut deriv = BigReal::zero(work);
            for _ in 0..200 {
                let (p, dp) = legendre_with_derivative(n, &x);
                let step = &p / &dp;
                x -= &step;
                deriv = dp;
                if step.is_zero() || step.exponent().unwrap_or(i32::MIN) < stop_exp {
                    let (_, dp) = legendre_with_derivative(n, &x);
                    deriv = dp;
                    break;
                }
            }
            // w = 2 / ((1 - x^2) P_n'(x)^2) on [-1, 1]; halved for [0, 1].
            let w = (&one - x.square()) * deriv.square();
            let w = w.recip();
            let upper = (&one + &x).mul_pow2(-1);
            let lower = (&one - &x).mul_pow2(-1);
            nodes[n - 1 - i] = upper.with_precision(prec);
            nodes[i] = lower.with_precision(prec);
            weights[i] = w.with_precision(prec);
            weights[n - 1 - i] = w.with_precision(prec);
        }
        GaussRule { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

fn legendre_with_derivative(n: usize, x: &BigReal) -> (BigReal, BigReal) {
    let prec = x.precision_bits();
    let mut prev = BigReal::one(prec);
    let mut cur = x.clone();
    for k in 2..=n {
        let k = k as i64;
        let next = (x * &cur).mul_i64(2 * k - 1) - prev.mul_i64(k - 1);
        prev = cur;
        cur = next.div_i64(k);
    }
    if n == 0 {
        return (BigReal::one(prec), BigReal::zero(prec));
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let dp = (x * &cur - &prev).mul_i64(n as i64) / (x.square() - BigReal::one(prec));
    (cur, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one() {
        for n in [1, 2, 8, 16, 17] {
            let rule = GaussRule::unit_interval(n, 256);
            let total = rule.weights.iter().fold(BigReal::zero(256), |acc, w| acc + w);
            assert!((total - BigReal::one(256)).abs() < 1e-70, "n = {n}");
        }
    }

    #[test]
    fn exact_for_degree_2n_minus_1() {
        let n = 16;
        let rule = GaussRule::unit_interval(n, 256);
        for degree in [0, 5, 20, 31] {
            let integral = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .fold(BigReal::zero(256), |acc, (x, w)| acc + w * x.powi(degree));
            let exact = BigReal::from_ratio(1, i64::from(degree) + 1, 256);
            assert!((integral - exact).abs() < 1e-70, "degree {degree}");
        }
    }

    #[test]
    fn nodes_are_sorted_and_symmetric() {
        let rule = GaussRule::unit_interval(9, 128);
        for pair in rule.nodes.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        assert!((&rule.nodes[4] - BigReal::from_f64(0.5, 128)).abs() < 1e-35);
    }
}
