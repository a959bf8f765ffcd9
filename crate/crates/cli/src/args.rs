//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_PRECISION_BITS: u32 = 128;
pub const DEFAULT_MAX_TERMS: u64 = 10_000;
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
/// Relative threshold for `verify` when `--tol` is absent.
pub const DEFAULT_VERIFY_THRESHOLD: f64 = 1e-8;
pub const DEFAULT_INTERVALS: u64 = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "glaisher",
    version,
    about = "High-precision ln A (Glaisher-Kinkelin) through six routes, with identity checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Working precision in bits
    #[arg(long, global = true, env = "GK_PRECISION_BITS", value_name = "BITS")]
    pub precision: Option<u32>,

    /// Upper limit on series terms for R3 and R6
    #[arg(long, global = true, value_name = "K")]
    pub max_terms: Option<u64>,

    /// Absolute tolerance (relative threshold for verify)
    #[arg(long, global = true, value_name = "TOL")]
    pub tol: Option<f64>,

    /// Quadrature intervals for R1
    #[arg(long, global = true, value_name = "N")]
    pub intervals: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[arg(long = "series2-mode", global = true, value_enum, default_value_t = ModeArg::Reconciled)]
    pub series2_mode: ModeArg,

    /// n for R5 (defaults to --max-terms)
    #[arg(long, global = true)]
    pub n: Option<u64>,

    /// Write the report to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Record wall-clock time in elapsed_ms
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute ln A through one representation
    Compute {
        #[arg(long, value_name = "REP")]
        rep: String,
    },
    /// Compute several representations and check them against the reference
    Compare {
        /// Comma-separated list; all six when omitted
        #[arg(long, value_name = "REPS", value_delimiter = ',')]
        reps: Vec<String>,
    },
    /// Partial sums of one representation over an index range
    Convergence {
        #[arg(long, value_name = "REP")]
        rep: String,
        /// Inclusive range A..B
        #[arg(long, value_name = "A..B")]
        range: String,
    },
    /// Check closed forms against quadrature
    Verify {
        /// Comma-separated identity names; all four when omitted
        #[arg(long, value_name = "NAMES", value_delimiter = ',')]
        names: Vec<String>,
        #[arg(long = "k-max", default_value_t = 1)]
        k_max: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Paper,
    Reconciled,
}

/// Parses `A..B` (inclusive). Rejects empty or reversed ranges.
pub fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("range {text:?} is not of the form A..B"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a == 0 {
        return Err("range must start at 1 or later".into());
    }
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..1000"), Ok((1, 1000)));
        assert_eq!(parse_range("5..=7"), Ok((5, 7)));
        assert!(parse_range("10..1").is_err());
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("3").is_err());
    }
}
