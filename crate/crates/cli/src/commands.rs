//! The four subcommands. Each produces serializable records; rendering and
//! the choice of exit code happen here, printing in `lib.rs`/`main.rs`.

use std::time::Instant;

use glaisher::bigreal::decimal_digits;
use glaisher::glaisher_reps::{
    convergence_trace, evaluate, ln_a_reference, verify_identity, RouteOptions,
};
use glaisher::{
    BigReal, Error, IdentityName, QuadratureConfig, Representation, Series2Mode, Verdict,
};

use crate::args::{self, Cli, Command, Format, ModeArg};
use crate::render::{
    self, CompareReport, CompareRow, ComputeRecord, ConvergenceRecord, VerifyRecord,
};
use crate::{Outcome, EXIT_ERROR, EXIT_MISMATCH, EXIT_NOT_CONVERGED, EXIT_OK, EXIT_USAGE};

/// Fully resolved settings of one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub precision_bits: u32,
    pub max_terms: u64,
    pub tolerance: Option<f64>,
    pub quadrature_intervals: u64,
    pub output_format: Format,
    pub series2_mode: Series2Mode,
    pub n: u64,
    pub timing: bool,
}

impl RunConfig {
    pub fn from_args(common: &args::CommonArgs) -> Result<Self, String> {
        let precision_bits = common.precision.unwrap_or(args::DEFAULT_PRECISION_BITS);
        if !(64..=glaisher::bigreal::MAX_PRECISION_BITS).contains(&precision_bits) {
            return Err(format!(
                "precision must lie in 64..={} bits, got {precision_bits}",
                glaisher::bigreal::MAX_PRECISION_BITS
            ));
        }
        let max_terms = common.max_terms.unwrap_or(args::DEFAULT_MAX_TERMS);
        if max_terms == 0 {
            return Err("--max-terms must be at least 1".into());
        }
        if let Some(tol) = common.tol {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(format!("--tol must be a positive number, got {tol}"));
            }
        }
        let quadrature_intervals = common.intervals.unwrap_or(args::DEFAULT_INTERVALS);
        QuadratureConfig::with_intervals(quadrature_intervals).map_err(|e| e.to_string())?;
        let n = common.n.unwrap_or(max_terms);
        if n == 0 {
            return Err("--n must be at least 1".into());
        }
        Ok(RunConfig {
            precision_bits,
            max_terms,
            tolerance: common.tol,
            quadrature_intervals,
            output_format: common.format,
            series2_mode: match common.series2_mode {
                ModeArg::Paper => Series2Mode::Paper,
                ModeArg::Reconciled => Series2Mode::Reconciled,
            },
            n,
            timing: common.timing,
        })
    }

    fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(args::DEFAULT_TOLERANCE)
    }

    fn route_options(&self) -> RouteOptions {
        RouteOptions {
            precision_bits: self.precision_bits,
            tolerance: self.tolerance(),
            max_terms: self.max_terms,
            n: self.n,
            quadrature: QuadratureConfig::with_intervals(self.quadrature_intervals)
                .expect("validated in from_args"),
            series2_mode: self.series2_mode,
        }
    }
}

/// Decimal places backed by both the precision and the error bound.
///
/// At most `floor(prec·log₁₀2) − 5`, and no more than `−log₁₀(tail_bound)`.
pub fn digits_claimed(tail_bound: f64, prec: u32) -> u32 {
    let cap = (decimal_digits(prec) as i64 - 5).max(0);
    let from_bound = if tail_bound <= 0.0 {
        cap
    } else if tail_bound.is_finite() {
        (-tail_bound.log10()).floor() as i64
    } else {
        0
    };
    cap.min(from_bound).max(0) as u32
}

/// `value` truncated to `places` decimal places (at least one significant digit).
fn format_value(value: &BigReal, places: u32) -> String {
    if value.is_zero() {
        return "0".into();
    }
    let magnitude = value.abs().to_f64().log10().floor() as i64 + 1;
    let significant = (i64::from(places) + magnitude).max(1) as usize;
    value.to_decimal_string(significant)
}

fn scientific(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.3e}")
    } else {
        "inf".into()
    }
}

fn classify(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::Parse { .. } => EXIT_USAGE,
        _ => EXIT_ERROR,
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        code: classify(e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn usage(message: String) -> Outcome {
    Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {message}\n\nFor more information, try '--help'.\n"),
    }
}

/// Sends `body` to `--out` when given, otherwise to stdout.
fn emit(body: String, out: Option<&std::path::Path>, code: i32) -> Outcome {
    match out {
        Some(path) => match std::fs::write(path, body) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: EXIT_ERROR,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome {
            code,
            stdout: body,
            stderr: String::new(),
        },
    }
}

pub fn dispatch(cli: Cli) -> Outcome {
    let cfg = match RunConfig::from_args(&cli.common) {
        Ok(cfg) => cfg,
        Err(message) => return usage(message),
    };
    let out = cli.common.out.as_deref();
    let result = match cli.command {
        Command::Compute { rep } => compute(&cfg, &rep),
        Command::Compare { reps } => compare(&cfg, &reps),
        Command::Convergence { rep, range } => convergence(&cfg, &rep, &range),
        Command::Verify { names, k_max } => verify(&cfg, &names, k_max),
    };
    match result {
        Ok((body, code)) => emit(body, out, code),
        Err(Failure::Usage(message)) => usage(message),
        Err(Failure::Compute(e)) => failure(&e),
    }
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type CommandResult = Result<(String, i32), Failure>;

fn parse_rep(text: &str) -> Result<Representation, Failure> {
    text.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn route_notes(rep: Representation, cfg: &RunConfig, eval: &glaisher::glaisher_reps::RouteEvaluation) -> String {
    let r = &eval.result;
    match rep {
        Representation::R1ZetaPrimeNeg1 => format!(
            "1/12 - zeta'(-1) by Apostol quadrature over {} unit intervals",
            cfg.quadrature_intervals
        ),
        Representation::R2GlaisherProduct => format!(
            "reference s-series summed through r = {}",
            r.terms_used + 1
        ),
        Representation::R3CiSeries => format!(
            "Ci series summed to K = {} (max_terms {})",
            r.terms_used, cfg.max_terms
        ),
        Representation::R4ZetaPrime2 => format!(
            "zeta'(2) by Euler-Maclaurin with {} terms and corrections",
            r.terms_used
        ),
        Representation::R5Hyperfactorial => format!("hyperfactorial limit at n = {}", cfg.n),
        Representation::R6HypergeometricSeries => {
            let outcome = eval.r6.as_ref().expect("R6 evaluation carries its outcome");
            let mut notes = outcome.notes.clone();
            for d in &outcome.coefficient_deltas {
                notes.push_str(&format!("; {}: {} -> {}", d.location, d.printed, d.reconciled));
            }
            if let Some(report) = &outcome.report {
                notes.push_str(&format!(
                    "; verdict against reference: {} (relative error {})",
                    report.verdict,
                    scientific(report.rel_error)
                ));
            }
            notes
        }
    }
}

fn compute(cfg: &RunConfig, rep: &str) -> CommandResult {
    let rep = parse_rep(rep)?;
    let start = Instant::now();
    let eval = evaluate(rep, &cfg.route_options())?;
    let elapsed = start.elapsed().as_millis() as u64;
    let r = &eval.result;
    let digits = digits_claimed(r.tail_bound, cfg.precision_bits);
    let mismatch = eval
        .r6
        .as_ref()
        .and_then(|o| o.report.as_ref())
        .is_some_and(|rep| rep.verdict == Verdict::Mismatch);
    let record = ComputeRecord {
        representation: rep.tag().into(),
        value: format_value(&r.value, digits),
        digits_claimed: digits,
        terms_used: r.terms_used,
        tail_bound: r.tail_bound,
        elapsed_ms: cfg.timing.then_some(elapsed),
        converged: r.converged,
        mode: (rep == Representation::R6HypergeometricSeries)
            .then(|| cfg.series2_mode.as_str().to_string()),
        notes: route_notes(rep, cfg, &eval),
    };
    let code = if r.converged && !mismatch {
        EXIT_OK
    } else {
        EXIT_NOT_CONVERGED
    };
    Ok((render::compute(&record, cfg.output_format), code))
}

fn compare(cfg: &RunConfig, reps: &[String]) -> CommandResult {
    let reps: Vec<Representation> = if reps.is_empty() {
        Representation::ALL.to_vec()
    } else {
        reps.iter().map(|r| parse_rep(r)).collect::<Result<_, _>>()?
    };
    let prec = cfg.precision_bits;
    let reference = ln_a_reference(prec + 64);
    let rounding = 2f64.powi(4 - prec as i32);
    let opts = cfg.route_options();
    let start = Instant::now();
    let mut rows = Vec::with_capacity(reps.len());
    let mut all_agree = true;
    for rep in reps {
        let eval = evaluate(rep, &opts)?;
        let r = eval.result;
        let error = (&r.value - &reference.value).abs().to_f64();
        let agrees = r
            .converged
            .then_some(error <= r.tail_bound + reference.tail_bound + rounding);
        if agrees == Some(false) {
            all_agree = false;
        }
        let digits = digits_claimed(r.tail_bound, prec);
        rows.push(CompareRow {
            representation: rep.tag().into(),
            value: format_value(&r.value, digits),
            digits_claimed: digits,
            error_vs_reference: scientific(error),
            tail_bound: r.tail_bound,
            converged: r.converged,
            agrees,
        });
    }
    let elapsed = start.elapsed().as_millis() as u64;
    let report = CompareReport {
        reference: format_value(&reference.value, digits_claimed(0.0, prec)),
        rows,
        all_agree,
        elapsed_ms: cfg.timing.then_some(elapsed),
    };
    let code = if all_agree { EXIT_OK } else { EXIT_MISMATCH };
    Ok((render::compare(&report, cfg.output_format), code))
}

fn convergence(cfg: &RunConfig, rep: &str, range: &str) -> CommandResult {
    let rep = parse_rep(rep)?;
    let (from, to) = args::parse_range(range).map_err(Failure::Usage)?;
    if rep == Representation::R4ZetaPrime2 {
        return Err(Failure::Usage(
            "R4_zeta_prime_2 has no series index; use compute instead".into(),
        ));
    }
    let prec = cfg.precision_bits;
    let reference = ln_a_reference(prec + 64).value;
    // one extra point so the first row has an increment
    let lead = if from > 1 && rep != Representation::R1ZetaPrimeNeg1 {
        from - 1
    } else {
        from
    };
    let points = convergence_trace(rep, lead, to, &cfg.route_options())?;
    let digits = decimal_digits(prec);
    let mut previous: Option<BigReal> = None;
    let mut records = Vec::with_capacity(points.len());
    for p in points {
        let increment = previous
            .as_ref()
            .map(|prev| (&p.value - prev).abs().to_scientific_string(6))
            .unwrap_or_default();
        previous = Some(p.value.clone());
        if p.k < from {
            continue;
        }
        records.push(ConvergenceRecord {
            k: p.k,
            partial_sum: p.value.to_decimal_string(digits),
            increment_abs: increment,
            error_vs_reference: (&p.value - &reference).abs().to_scientific_string(6),
        });
    }
    Ok((render::convergence(&records, cfg.output_format), EXIT_OK))
}

fn verify(cfg: &RunConfig, names: &[String], k_max: u64) -> CommandResult {
    if k_max == 0 {
        return Err(Failure::Usage("--k-max must be at least 1".into()));
    }
    let names: Vec<IdentityName> = if names.is_empty() {
        IdentityName::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|n| n.parse().map_err(|e: Error| Failure::Usage(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let threshold = cfg.tolerance.unwrap_or(args::DEFAULT_VERIFY_THRESHOLD);
    let prec = cfg.precision_bits;
    let digits = digits_claimed(0.0, prec) as usize;
    let mut records = Vec::new();
    let mut all_match = true;
    for name in names {
        let ks = if name.takes_k() { 1..=k_max } else { 1..=1 };
        for k in ks {
            let report = verify_identity(name, k, threshold, prec)?;
            all_match &= report.verdict == Verdict::Match;
            records.push(VerifyRecord {
                identity_name: report.identity_name.clone(),
                k_or_s: report.parameter,
                lhs: report.lhs.to_scientific_string(digits),
                rhs: report.rhs.to_scientific_string(digits),
                rel_error: report.rel_error,
                threshold: report.threshold,
                oracle_bound: report.oracle_bound,
                verdict: report.verdict.as_str().into(),
                notes: report.notes.clone(),
                corrected_rel_error: report.corrected.as_ref().map(|c| c.rel_error),
                corrected_verdict: report.corrected.as_ref().map(|c| c.verdict.as_str().into()),
            });
        }
    }
    let code = if all_match { EXIT_OK } else { EXIT_MISMATCH };
    Ok((render::verify(&records, cfg.output_format), code))
}
