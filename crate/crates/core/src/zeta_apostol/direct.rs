//! ζ′(s) = −Σ_{k≥2} ln k / k^s with an Euler–Maclaurin tail.
//!
//! With `f(x) = ln x · x^{−s}`, cutoff `M` and `p` Bernoulli corrections,
//!
//! ```text
//! Σ_{k≥M} f(k) = ∫_M^∞ f + f(M)/2 − Σ_{j≤p} B_{2j}/(2j)! · f^{(2j−1)}(M) + R,
//! |R| ≤ 2 |B_{2p+2}|/(2p+2)! · |f^{(2p+1)}(M)|
//! ```
//!
//! the bound holding once `f^{(2p+2)}` keeps one sign on `[M, ∞)`.
//! Derivatives have the form `f⁽ⁿ⁾(x) = x^{−s−n} (aₙ + bₙ ln x)`, and
//! `B_{2j}/(2j)! = (−1)^{j+1} 2ζ(2j)/(2π)^{2j}`.

use crate::zeta_apostol::BorweinEta;
use crate::{bits_for_tol, check_tol, constants, BigReal, Error, Result, SeriesResult};

/// Largest number of Bernoulli corrections considered.
const MAX_CORRECTIONS: u32 = 400;
const MAX_CUTOFF: u64 = 1 << 24;

/// `(f⁽ⁿ⁾(M), aₙ, bₙ)` for n = 0..=n_max.
fn derivatives(s: &BigReal, m: &BigReal, n_max: u32) -> Vec<(BigReal, BigReal, BigReal)> {
    let prec = s.precision_bits().max(m.precision_bits());
    let ln_m = m.ln();
    let mut scale = (-(s * &ln_m)).exp();
    let mut a = BigReal::zero(prec);
    let mut b = BigReal::one(prec);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        out.push((&scale * (&a + &b * &ln_m), a.clone(), b.clone()));
        let shift = s + BigReal::from_i64(i64::from(n), prec);
        let next_a = -(&shift * &a) + &b;
        b = -(&shift * &b);
        a = next_a;
        scale = &scale / m;
    }
    out
}

/// `B_{2j}/(2j)!` for j = 1..=j_max.
fn bernoulli_over_factorial(j_max: u32, prec: u32) -> Vec<BigReal> {
    let zeta = BorweinEta::for_bits(prec, prec).zeta_minus_one_table(2 * j_max);
    let two_pi_sq = constants::pi(prec + 32).mul_i64(2).square();
    let one = BigReal::one(prec + 32);
    let mut power = one.clone();
    (1..=j_max)
        .map(|j| {
            power = &power * &two_pi_sq;
            let z = &zeta[(2 * j - 2) as usize] + &one;
            let v = (z.mul_i64(2) / &power).with_precision(prec);
            if j % 2 == 1 {
                v
            } else {
                -v
            }
        })
        .collect()
}

/// Whether `x^{−s−n}(a + b ln x)` keeps one sign for `x ≥ M`.
fn single_signed(a: &BigReal, b: &BigReal, ln_m: f64) -> bool {
    if b.is_zero() {
        return true;
    }
    // root at ln x = −a/b
    (-(a / b)).to_f64() < ln_m
}

struct Plan {
    cutoff: u64,
    corrections: u32,
    bound: f64,
}

/// Cheapest `(M, p)` over power-of-two `M` whose remainder is below `target`.
fn choose_plan(s: &BigReal, target: f64) -> Result<Plan> {
    let s = s.with_precision(64);
    let mut m: u64 = 8;
    loop {
        let mf = BigReal::from_i64(m as i64, 64);
        let p_max = MAX_CORRECTIONS.min((std::f64::consts::PI * m as f64) as u32).max(1);
        let derivs = derivatives(&s, &mf, 2 * p_max + 2);
        let coeffs = bernoulli_over_factorial(p_max + 1, 64);
        let ln_m = (m as f64).ln();
        for p in 1..=p_max {
            let (_, a, b) = &derivs[(2 * p + 2) as usize];
            if !single_signed(a, b, ln_m) {
                continue;
            }
            let next = &coeffs[p as usize];
            let bound = (next * &derivs[(2 * p + 1) as usize].0).abs().mul_i64(2).to_f64();
            if bound <= target {
                return Ok(Plan {
                    cutoff: m,
                    corrections: p,
                    bound,
                });
            }
        }
        if m >= MAX_CUTOFF {
            return Err(Error::Precision {
                function: "zeta_prime_direct",
                required_bits: bits_for_tol(target),
                detail: format!(" (Euler-Maclaurin cutoff exceeds {MAX_CUTOFF} for s = {s})"),
            });
        }
        m *= 2;
    }
}

pub fn zeta_prime_direct(s: &BigReal, tol: f64) -> Result<SeriesResult> {
    check_tol("zeta_prime_direct", tol)?;
    if !s.is_finite() || *s <= 1.0 {
        return Err(Error::Domain {
            function: "zeta_prime_direct",
            argument: format!("s = {}", s.to_scientific_string(20)),
            domain: "s > 1",
        });
    }
    let sf = s.to_f64();
    let plan = choose_plan(s, tol / 2.0)?;
    let cutoff = plan.cutoff;
    let prec = s.precision_bits();
    let wp = prec.max(bits_for_tol(tol)) + 64 - cutoff.leading_zeros() + 32;
    let s = s.with_precision(wp);
    let integer_s = (s.is_integer() && sf < 1.0e6).then_some(sf as i32);

    let mut head = BigReal::zero(wp);
    for k in 2..cutoff {
        let x = BigReal::from_i64(k as i64, wp);
        let ln_x = x.ln();
        let power = match integer_s {
            Some(p) => x.powi(-p),
            None => (-(&s * &ln_x)).exp(),
        };
        head += power * &ln_x;
    }

    let m = BigReal::from_i64(cutoff as i64, wp);
    let ln_m = m.ln();
    let derivs = derivatives(&s, &m, 2 * plan.corrections - 1);
    let coeffs = bernoulli_over_factorial(plan.corrections, wp);
    let one = BigReal::one(wp);
    let s_minus_1 = &s - &one;
    let m_pow = &derivs[0].0 / &ln_m;
    let integral = &m_pow * &m * (&ln_m / &s_minus_1 + s_minus_1.square().recip());
    let mut tail = integral + derivs[0].0.mul_pow2(-1);
    for (j, c) in coeffs.iter().enumerate() {
        tail -= c * &derivs[2 * j + 1].0;
    }

    let value = -(head + tail);
    let terms = cutoff - 2 + u64::from(plan.corrections);
    Ok(SeriesResult::new(value.with_precision(prec), terms, plan.bound, tol))
}
