//! ζ′(x) through Apostol's representation
//!
//! ```text
//! ζ′(x) = −1/(x−1)² + 1/12 − x(x+1)(x+2)/6 · I₃′(x) − (3x²+6x+2)/6 · I₃(x),   x > −2
//! I₃(s)  =  ∫₁^∞ P₃(x) / x^{s+3} dx
//! I₃′(s) = −∫₁^∞ P₃(x) ln x / x^{s+3} dx
//! ```
//!
//! together with an independent Dirichlet-series oracle for ζ′(s), s > 1, and
//! integer zeta values.

mod apostol;
mod direct;
mod integer;

pub use apostol::{i3, i3_prime, zeta_prime_apostol, ApostolEvaluation, QuadratureConfig};
pub use direct::zeta_prime_direct;
pub use integer::{zeta_int, BorweinEta};
