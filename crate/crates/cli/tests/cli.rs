use std::process::{Command, Output};

use glaisher::glaisher_reps::ln_a_reference;
use glaisher::BigReal;
use serde_json::Value;

fn glaisher_cmd(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_glaisher"));
    cmd.args(args).env_remove("GK_PRECISION_BITS");
    cmd
}

fn run(args: &[&str]) -> Output {
    glaisher_cmd(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("UTF-8 output")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

/// The printed value re-parses to within its tail bound plus the truncation
/// to `digits_claimed` places of ln A.
fn assert_round_trips(record: &Value, prec: u32) {
    let text = record["value"].as_str().unwrap();
    let digits = record["digits_claimed"].as_u64().unwrap() as i32;
    let tail = record["tail_bound"].as_f64().unwrap();
    let parsed = BigReal::parse(text, prec).unwrap();
    let reference = ln_a_reference(prec + 64).value;
    let err = (&parsed - &reference).abs().to_f64();
    assert!(err <= tail + 10f64.powi(-digits), "{text}: {err:e} with {digits} digits");
}

#[test]
fn compute_r2_at_256_bits() {
    let out = run(&["compute", "--rep", "r2", "--precision", "256"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("0.24875447703378"));

    let out = run(&["compute", "--rep", "r2", "--precision", "256", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["value"].as_str().unwrap().starts_with("0.24875447703378"));
    assert_eq!(v["converged"], Value::Bool(true));
    assert!(v["elapsed_ms"].is_null());
    assert_round_trips(&v, 256);
}

#[test]
fn compute_json_has_stable_keys() {
    let out = run(&["compute", "--rep", "r4", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let expected = [
        "representation",
        "value",
        "digits_claimed",
        "terms_used",
        "tail_bound",
        "elapsed_ms",
        "converged",
        "mode",
        "notes",
    ];
    let positions: Vec<usize> = expected
        .iter()
        .map(|k| text.find(&format!("\"{k}\":")).unwrap_or_else(|| panic!("missing {k}")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
    assert_eq!(json(&out).as_object().unwrap().len(), expected.len());
}

#[test]
fn json_values_round_trip_for_every_route() {
    for rep in ["r1", "r2", "r3", "r4", "r5", "r6"] {
        let out = run(&["compute", "--rep", rep, "--format", "json", "--n", "1000"]);
        let v = json(&out);
        assert_round_trips(&v, 128);
        let expected = if v["converged"].as_bool().unwrap() { 0 } else { 2 };
        assert_eq!(code(&out), expected, "{rep}");
    }
}

#[test]
fn compute_r3_single_term() {
    let out = run(&["compute", "--rep", "r3", "--max-terms", "1", "--format", "json"]);
    let v = json(&out);
    // one term leaves a tail of about 1/(12π⁴) ≈ 8.6e−4, above the default tolerance
    assert_eq!(v["terms_used"], 1);
    assert_eq!(v["converged"], Value::Bool(false));
    assert_eq!(code(&out), 2);
    let value: f64 = v["value"].as_str().unwrap().parse().unwrap();
    let pi = std::f64::consts::PI;
    let single = 0.25 * (1.0 + 2.0 / (pi * pi) * -0.022_560_661_746_346_07);
    assert!((value - single).abs() <= 10f64.powi(-(v["digits_claimed"].as_i64().unwrap() as i32)));

    let loose = run(&["compute", "--rep", "r3", "--max-terms", "1", "--tol", "1e-3"]);
    assert_eq!(code(&loose), 0);
}

#[test]
fn compute_r6_paper_mode_exits_cleanly() {
    let out = run(&["compute", "--rep", "r6", "--series2-mode", "paper", "--format", "json"]);
    assert!([0, 2].contains(&code(&out)));
    let v = json(&out);
    assert_eq!(v["mode"], "paper");
    assert!(v["notes"].as_str().unwrap().contains("verdict"));
}

#[test]
fn compare_examples() {
    let out = run(&["compare", "--reps", "r1,r2,r3,r4", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert_eq!(row["agrees"], Value::Bool(true));
        assert_round_trips(row, 128);
    }

    let out = run(&["compare", "--reps", "r5", "--n", "1000", "--format", "json"]);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    let err: f64 = rows[0]["error_vs_reference"].as_str().unwrap().parse().unwrap();
    assert!(err < 1e-8);

    assert_eq!(code(&run(&["compare", "--reps", "r1,r9"])), 64);
}

#[test]
fn convergence_r3_scales_like_inverse_cube() {
    let out = run(&["convergence", "--rep", "r3", "--range", "1..1000", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,partial_sum,increment_abs,error_vs_reference"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 1000);
    let ks: Vec<u64> = rows.iter().map(|r| r[0].parse().unwrap()).collect();
    assert!(ks.windows(2).all(|w| w[0] < w[1]));
    let err = |k: usize| -> f64 { rows[k - 1][3].parse().unwrap() };
    assert!(err(10) / err(1000) >= 1e4, "{} / {}", err(10), err(1000));
}

#[test]
fn convergence_r5_decreases() {
    let out = run(&["convergence", "--rep", "r5", "--range", "100..800", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let errors: Vec<f64> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(errors.len(), 701);
    assert!(errors.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn convergence_rejects_bad_ranges() {
    assert_eq!(code(&run(&["convergence", "--rep", "r3", "--range", "10..1"])), 64);
    assert_eq!(code(&run(&["convergence", "--rep", "r3", "--range", "abc"])), 64);
    assert_eq!(code(&run(&["convergence", "--rep", "r4", "--range", "1..5"])), 64);
}

#[test]
fn verify_exit_codes_follow_verdicts() {
    let out = run(&["verify", "--names", "eq15_ci", "--k-max", "5", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 5);
    assert!(reports.iter().all(|r| r["verdict"] == "match"));

    // the printed sine-moment closed form does not reproduce the quadrature
    let out = run(&["verify", "--names", "eq24_si", "--k-max", "3", "--format", "json"]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for r in reports {
        assert_eq!(r["verdict"], "mismatch");
        assert_eq!(r["corrected_verdict"], "match");
    }

    let out = run(&["verify", "--names", "eq27_i3_series", "--format", "json"]);
    let v = json(&out);
    let r = &v.as_array().unwrap()[0];
    assert!(!r["notes"].as_str().unwrap().is_empty());
    let expected = if r["verdict"] == "match" { 0 } else { 3 };
    assert_eq!(code(&out), expected);

    assert_eq!(code(&run(&["verify", "--names", "eq99"])), 64);
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["frobnicate"][..],
        &["compute"],
        &["compute", "--rep", "r7"],
        &["compute", "--rep", "r2", "--precision", "12"],
        &["compute", "--rep", "r2", "--tol", "-1"],
        &["compute", "--rep", "r2", "--intervals", "3"],
        &["compute", "--rep", "r2", "--format", "yaml"],
        &["compute", "--rep", "r6", "--series2-mode", "guess"],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 64, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn r6_beyond_cap_is_an_error() {
    let out = run(&["compute", "--rep", "r6", "--tol", "1e-30", "--max-terms", "500"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("200"));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["compute", "--rep", "r3", "--format", "json"][..],
        &["compare", "--reps", "r2,r4,r5", "--format", "csv"],
        &["convergence", "--rep", "r2", "--range", "2..40", "--format", "json"],
        &["verify", "--names", "eq15_ci", "--k-max", "2", "--format", "text"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(code(&a), code(&b));
    }
}

#[test]
fn environment_sets_precision_but_flags_win() {
    let mut cmd = glaisher_cmd(&["compute", "--rep", "r2", "--format", "json"]);
    let env_only = cmd.env("GK_PRECISION_BITS", "256").output().unwrap();
    let from_env = json(&env_only)["digits_claimed"].as_u64().unwrap();

    let mut cmd = glaisher_cmd(&["compute", "--rep", "r2", "--format", "json", "--precision", "128"]);
    let flag = cmd.env("GK_PRECISION_BITS", "256").output().unwrap();
    let from_flag = json(&flag)["digits_claimed"].as_u64().unwrap();

    let default = json(&run(&["compute", "--rep", "r2", "--format", "json"]))["digits_claimed"]
        .as_u64()
        .unwrap();
    assert_eq!(from_flag, default);
    assert!(from_env > from_flag);

    let mut cmd = glaisher_cmd(&["compute", "--rep", "r2"]);
    let bad = cmd.env("GK_PRECISION_BITS", "lots").output().unwrap();
    assert_eq!(code(&bad), 64);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["compute", "--rep", "r2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    let direct = run(&["compute", "--rep", "r2", "--format", "json"]);
    assert_eq!(written, direct.stdout);
}

#[test]
fn timing_fills_elapsed_ms() {
    let out = run(&["compute", "--rep", "r2", "--format", "json", "--timing"]);
    assert!(json(&out)["elapsed_ms"].is_u64());
}
