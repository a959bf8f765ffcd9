#![allow(dead_code)]

use glaisher::BigReal;

// Frozen from 50-digit mpmath runs, cross-checked against the reference route.
pub const LN_A: &str = "0.2487544770337842625472529935761139760974";
pub const ZETA_PRIME_2: &str = "-0.9375482543158437537025740945678649778979";
pub const ZETA_PRIME_NEG1: &str = "-0.165421143700450929213919660242780642764";
pub const ZETA_PRIME_4: &str = "-0.06891126589612537984882936558744082715002";
pub const ZETA_3: &str = "1.202056903159594285399738161511449990765";
pub const CI_2PI: &str = "-0.02256066174634606764353877854304643364737";
pub const SI_PI: &str = "1.851937051982466170361053370157991363346";

pub fn big(text: &str, prec: u32) -> BigReal {
    BigReal::parse(text, prec).unwrap()
}

pub fn abs_diff(a: &BigReal, b: &BigReal) -> f64 {
    (a - b).abs().to_f64()
}

/// Bit-level equality including precision.
pub fn identical(a: &BigReal, b: &BigReal) -> bool {
    a.precision_bits() == b.precision_bits() && a.as_float().to_string_radix(16, None) == b.as_float().to_string_radix(16, None)
}
