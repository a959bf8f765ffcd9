mod common;

use common::abs_diff;
use glaisher::glaisher_reps::verify_identity;
use glaisher::{IdentityName, IdentityReport, Verdict};

const THRESHOLD: f64 = 1e-8;

fn check_consistent(r: &IdentityReport) {
    assert_eq!(r.verdict == Verdict::Match, r.rel_error <= r.threshold, "{}", r.identity_name);
    assert!(!r.notes.is_empty());
    if r.verdict == Verdict::Mismatch {
        assert!(r.notes.contains("suspected printed coefficient"), "{}", r.notes);
    }
    assert!(r.oracle_bound.is_finite() && r.oracle_bound >= 0.0);
    if let Some(c) = &r.corrected {
        assert!(!c.description.is_empty());
        assert_eq!(c.verdict == Verdict::Match, c.rel_error <= r.threshold);
    }
}

/// The quadrature value sits within its reported bound of a trusted closed form.
fn check_oracle_bound(r: &IdentityReport, trusted: &glaisher::BigReal) {
    let diff = abs_diff(&r.rhs, trusted);
    assert!(diff <= r.oracle_bound + 1e-30, "{} k={}: {diff:e} > {:e}", r.identity_name, r.parameter, r.oracle_bound);
}

#[test]
fn eq15_matches_for_first_eight_k() {
    for k in 1..=8 {
        let r = verify_identity(IdentityName::Eq15Ci, k, THRESHOLD, 128).unwrap();
        check_consistent(&r);
        assert_eq!(r.verdict, Verdict::Match, "k = {k}: {:e}", r.rel_error);
        check_oracle_bound(&r, &r.lhs);
    }
    let r = verify_identity(IdentityName::Eq15Ci, 1, 1e-9, 128).unwrap();
    assert_eq!(r.verdict, Verdict::Match);
}

#[test]
fn eq24_printed_form_is_refuted_and_corrected_form_matches() {
    for k in 1..=8 {
        let r = verify_identity(IdentityName::Eq24Si, k, THRESHOLD, 128).unwrap();
        check_consistent(&r);
        assert_eq!(r.verdict, Verdict::Mismatch, "k = {k}");
        let fix = r.corrected.as_ref().unwrap();
        assert_eq!(fix.verdict, Verdict::Match, "k = {k}: {:e}", fix.rel_error);
        check_oracle_bound(&r, &fix.lhs);
    }
}

#[test]
fn eq27_produces_a_definite_report() {
    let r = verify_identity(IdentityName::Eq27I3Series, 1, THRESHOLD, 128).unwrap();
    check_consistent(&r);
    assert_eq!(r.parameter, 2.0);
    assert_eq!(r.verdict, Verdict::Match, "{:e}", r.rel_error);
}

#[test]
fn eq29_reports_for_first_six_k() {
    for k in 1..=6 {
        let r = verify_identity(IdentityName::Eq29Hyp, k, THRESHOLD, 128).unwrap();
        check_consistent(&r);
        assert_eq!(r.verdict, Verdict::Mismatch, "k = {k}");
        let fix = r.corrected.as_ref().unwrap();
        assert_eq!(fix.verdict, Verdict::Match, "k = {k}: {:e}", fix.rel_error);
        check_oracle_bound(&r, &fix.lhs);
    }
}

#[test]
fn k_zero_is_rejected_where_k_matters() {
    assert!(verify_identity(IdentityName::Eq15Ci, 0, THRESHOLD, 128).is_err());
    assert!(verify_identity(IdentityName::Eq29Hyp, 0, THRESHOLD, 128).is_err());
    assert!(verify_identity(IdentityName::Eq27I3Series, 0, THRESHOLD, 128).is_ok());
}

#[test]
fn names_parse_and_print() {
    for name in IdentityName::ALL {
        assert_eq!(name.as_str().parse::<IdentityName>().unwrap(), name);
    }
    assert!("eq99".parse::<IdentityName>().is_err());
}
