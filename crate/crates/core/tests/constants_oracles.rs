//! The stored π and γ literals against computations that share nothing with them.

use glaisher::constants::{euler_gamma, ln_2pi_computed, ln_2pi_literal, pi};
use rug::ops::Pow;
use rug::Float;

const BITS: u32 = 3300;

/// Gauss–Legendre (AGM) iteration; quadratic convergence.
fn agm_pi(prec: u32) -> Float {
    let wp = prec + 64;
    let mut a = Float::with_val(wp, 1);
    let mut b = Float::with_val(wp, 0.5).sqrt();
    let mut t = Float::with_val(wp, 0.25);
    let mut p = Float::with_val(wp, 1);
    for _ in 0..24 {
        let next_a = Float::with_val(wp, &a + &b) / 2;
        let next_b = Float::with_val(wp, &a * &b).sqrt();
        let d = Float::with_val(wp, &a - &next_a);
        t -= Float::with_val(wp, &p * d.square());
        p *= 2;
        a = next_a;
        b = next_b;
    }
    Float::with_val(wp, &a + &b).square() / (t * 4)
}

/// Brent–McMillan: γ = U/V − ln n with error ~ e^{−4n}.
fn brent_mcmillan_gamma(prec: u32) -> Float {
    let n = (f64::from(prec) * std::f64::consts::LN_2 / 4.0).ceil() as u32 + 8;
    // the terms peak near e^{2n} before the ratio settles
    let wp = prec + (2.0 * f64::from(n) * std::f64::consts::LOG2_E) as u32 + 64;
    let n2 = Float::with_val(wp, n).square();
    let ln_n = Float::with_val(wp, n).ln();
    let mut a = Float::with_val(wp, -&ln_n);
    let mut b = Float::with_val(wp, 1);
    let mut u = a.clone();
    let mut v = b.clone();
    let mut k = 1u32;
    loop {
        b = b * &n2 / (k * k);
        a = (a * &n2 / k + &b) / k;
        u += &a;
        v += &b;
        if k > n && b.clone().abs() < Float::with_val(wp, 2).pow(-(wp as i32)) * &v {
            break;
        }
        k += 1;
    }
    u / v
}

fn close(a: &Float, b: &Float, bits: u32) -> bool {
    let diff = Float::with_val(a.prec().max(b.prec()), a - b).abs();
    diff < Float::with_val(64, 2).pow(-(bits as i32))
}

#[test]
fn pi_literal_matches_agm() {
    let lit = pi(BITS);
    let oracle = agm_pi(BITS);
    assert!(close(lit.as_float(), &oracle, BITS - 4));
    let nudged = Float::with_val(BITS, lit.as_float() + Float::with_val(64, 2).pow(-(BITS as i32 - 20)));
    assert!(!close(&nudged, &oracle, BITS - 4));
}

#[test]
fn gamma_literal_matches_brent_mcmillan() {
    let lit = euler_gamma(BITS);
    assert!(close(lit.as_float(), &brent_mcmillan_gamma(BITS), BITS - 8));
}

#[test]
fn ln_2pi_literal_matches_recomputation() {
    for prec in [64, 128, 1000, BITS] {
        let lit = ln_2pi_literal(prec);
        let computed = ln_2pi_computed(prec);
        assert!(close(lit.as_float(), computed.as_float(), prec - 2), "prec {prec}");
    }
}

#[test]
fn constants_honour_requested_precision() {
    for prec in [64, 200, 1024] {
        assert_eq!(pi(prec).precision_bits(), prec);
        assert_eq!(euler_gamma(prec).precision_bits(), prec);
    }
}
