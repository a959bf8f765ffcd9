//! ζ(r) at integers r ≥ 2 through Borwein's accelerated alternating series
//!
//! ```text
//! η(s) = Σ_{k<n} (−1)^k (d_n − d_k)/d_n · (k+1)^{−s} + γ_n,   |γ_n| ≤ 3/(3+√8)^n
//! d_k  = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!)
//! ζ(s) = η(s) / (1 − 2^{1−s})
//! ```

use rug::Integer;

use crate::{bits_for_tol, check_tol, BigReal, Error, Result};

/// Precomputed weights `(−1)^k (d_n − d_k)/d_n` of an `n`-term Borwein sum.
#[derive(Clone, Debug)]
pub struct BorweinEta {
    pub weights: Vec<BigReal>,
}

impl BorweinEta {
    /// Enough terms for absolute error `tol` in ζ(r) for every r ≥ 2.
    pub fn for_tolerance(tol: f64, prec: u32) -> Self {
        Self::for_bits(bits_for_tol(tol), prec)
    }

    /// Enough terms for absolute error `2^{−bits}` in ζ(r) for every r ≥ 2.
    pub fn for_bits(bits: u32, prec: u32) -> Self {
        // |γ_n| ≤ 3(3+√8)^{−n}, doubled by the 1/(1 − 2^{1−r}) factor
        let rate = (3.0 + 8f64.sqrt()).log2();
        let n = ((f64::from(bits) + 6f64.log2()) / rate).ceil().max(1.0) as u64;
        Self::with_terms(n, prec.max(bits) + 32)
    }

    pub fn with_terms(n: u64, prec: u32) -> Self {
        let mut d = Vec::with_capacity(n as usize + 1);
        let mut acc = Integer::new();
        // term_i = (n+i−1)! 4^i / ((n−i)! (2i)!), built by ratios
        let mut term = Integer::from(1); // i = 0: (n−1)!/n! = 1/n, times the leading n
        for i in 0..=n {
            if i > 0 {
                // term_i / term_{i−1} = (n+i−1)(n−i+1) · 4 / ((2i−1)(2i))
                term *= (n + i - 1) * (n - i + 1) * 4;
                let den = Integer::from((2 * i - 1) * (2 * i));
                debug_assert!(term.is_divisible(&den));
                term.div_exact_mut(&den);
            }
            acc += &term;
            d.push(acc.clone());
        }
        let dn = BigReal::from_integer(&d[n as usize], prec);
        let weights = (0..n as usize)
            .map(|k| {
                let diff = BigReal::from_integer(&Integer::from(&d[n as usize] - &d[k]), prec);
                let w = diff / &dn;
                if k % 2 == 0 {
                    w
                } else {
                    -w
                }
            })
            .collect();
        BorweinEta { weights }
    }

    pub fn precision_bits(&self) -> u32 {
        self.weights.first().map_or(64, BigReal::precision_bits)
    }

    pub fn eta(&self, r: u32) -> BigReal {
        let prec = self.precision_bits();
        let mut sum = BigReal::zero(prec);
        for (k, w) in self.weights.iter().enumerate() {
            let base = BigReal::from_i64(k as i64 + 1, prec);
            sum += w * base.powi(-(r as i32));
        }
        sum
    }

    /// ζ(r) − 1 for r = 2..=r_max, sharing powers across r.
    pub fn zeta_minus_one_table(&self, r_max: u32) -> Vec<BigReal> {
        let prec = self.precision_bits();
        let inverses: Vec<BigReal> = (0..self.weights.len())
            .map(|k| BigReal::from_i64(k as i64 + 1, prec).recip())
            .collect();
        let mut powers: Vec<BigReal> = inverses.iter().map(BigReal::square).collect();
        let one = BigReal::one(prec);
        let mut out = Vec::with_capacity(r_max.saturating_sub(1) as usize);
        for r in 2..=r_max {
            if r > 2 {
                for (p, inv) in powers.iter_mut().zip(&inverses) {
                    *p *= inv;
                }
            }
            let eta = self
                .weights
                .iter()
                .zip(&powers)
                .fold(BigReal::zero(prec), |acc, (w, p)| acc + w * p);
            let factor = &one - one.mul_pow2(1 - r as i32);
            out.push(eta / factor - &one);
        }
        out
    }
}

/// ζ(r) for integer r ≥ 2 to absolute accuracy `tol`, at `prec` bits.
pub fn zeta_int(r: u32, tol: f64, prec: u32) -> Result<BigReal> {
    check_tol("zeta_int", tol)?;
    if r < 2 {
        return Err(Error::Domain {
            function: "zeta_int",
            argument: format!("r = {r}"),
            domain: "r >= 2",
        });
    }
    let table = BorweinEta::for_tolerance(tol, prec);
    let wp = table.precision_bits();
    let one = BigReal::one(wp);
    let factor = &one - one.mul_pow2(1 - r as i32);
    let value = table.eta(r) / factor;
    crate::special_functions::round_to_output("zeta_int", value, prec, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants;

    #[test]
    fn even_values_have_closed_forms() {
        let pi = constants::pi(128);
        let z2 = zeta_int(2, 1e-30, 128).unwrap();
        assert!((z2 - pi.square().div_i64(6)).abs() < 1e-30);
        let z4 = zeta_int(4, 1e-30, 128).unwrap();
        assert!((z4 - pi.powi(4).div_i64(90)).abs() < 1e-30);
    }

    #[test]
    fn apery_constant_is_stable_under_precision_doubling() {
        let a = zeta_int(3, 1e-30, 128).unwrap();
        let b = zeta_int(3, 1e-60, 256).unwrap();
        assert!((&a - &b).abs() < 1e-30);
        assert!((a.to_f64() - 1.202_056_903_159_594).abs() < 1e-15);
    }

    #[test]
    fn tends_to_one() {
        let z = zeta_int(50, 1e-20, 128).unwrap();
        assert!(z > 1.0);
        assert!((z - 1.0).to_f64() < 1e-15);
        assert!(zeta_int(1, 1e-10, 128).is_err());
    }

    #[test]
    fn table_matches_single_evaluations() {
        let table = BorweinEta::for_tolerance(1e-40, 160);
        let rows = table.zeta_minus_one_table(12);
        for (i, row) in rows.iter().enumerate() {
            let r = i as u32 + 2;
            let single = zeta_int(r, 1e-40, 160).unwrap() - 1.0;
            assert!((row - &single).abs() < 1e-39, "r = {r}");
        }
    }
}
