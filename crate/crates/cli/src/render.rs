//! Text, JSON and CSV renderings. JSON keys and CSV headers are stable.

use serde::Serialize;

use crate::args::Format;

#[derive(Clone, Debug, Serialize)]
pub struct ComputeRecord {
    pub representation: String,
    pub value: String,
    pub digits_claimed: u32,
    pub terms_used: u64,
    pub tail_bound: f64,
    pub elapsed_ms: Option<u64>,
    pub converged: bool,
    pub mode: Option<String>,
    pub notes: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareRow {
    pub representation: String,
    pub value: String,
    pub digits_claimed: u32,
    pub error_vs_reference: String,
    pub tail_bound: f64,
    pub converged: bool,
    /// `None` for routes that did not converge; they are not judged.
    pub agrees: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub reference: String,
    pub rows: Vec<CompareRow>,
    pub all_agree: bool,
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceRecord {
    pub k: u64,
    pub partial_sum: String,
    pub increment_abs: String,
    pub error_vs_reference: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyRecord {
    pub identity_name: String,
    pub k_or_s: f64,
    pub lhs: String,
    pub rhs: String,
    pub rel_error: f64,
    pub threshold: f64,
    pub oracle_bound: f64,
    pub verdict: String,
    pub notes: String,
    pub corrected_rel_error: Option<f64>,
    pub corrected_verdict: Option<String>,
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("records serialize");
    }
    let bytes = w.into_inner().expect("in-memory writer");
    String::from_utf8(bytes).expect("csv output is UTF-8")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn sci(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.3e}")
    } else {
        "inf".into()
    }
}

pub fn compute(r: &ComputeRecord, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => csv(std::slice::from_ref(r)),
        Format::Text => {
            let lines = [
                ("representation", r.representation.clone()),
                ("value", r.value.clone()),
                ("digits_claimed", r.digits_claimed.to_string()),
                ("terms_used", r.terms_used.to_string()),
                ("tail_bound", sci(r.tail_bound)),
                ("converged", r.converged.to_string()),
                ("mode", opt(&r.mode)),
                ("elapsed_ms", opt(&r.elapsed_ms)),
                ("notes", r.notes.clone()),
            ];
            lines
                .iter()
                .map(|(k, v)| format!("{k:<16}{v}\n"))
                .collect()
        }
    }
}

pub fn compare(r: &CompareReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => csv(&r.rows),
        Format::Text => {
            let width = r.rows.iter().map(|row| row.value.len()).max().unwrap_or(5).max(5);
            let mut out = format!("reference  {}\n\n", r.reference);
            out.push_str(&format!(
                "{:<26}{:<width$}  {:>10}  {:>10}  {:<9}  {}\n",
                "representation", "value", "error", "bound", "converged", "agrees"
            ));
            for row in &r.rows {
                let agrees = match row.agrees {
                    Some(true) => "yes",
                    Some(false) => "NO",
                    None => "-",
                };
                out.push_str(&format!(
                    "{:<26}{:<width$}  {:>10}  {:>10}  {:<9}  {}\n",
                    row.representation,
                    row.value,
                    row.error_vs_reference,
                    sci(row.tail_bound),
                    row.converged,
                    agrees
                ));
            }
            out.push_str(&format!(
                "\n{}\n",
                if r.all_agree {
                    "all converged routes agree within their bounds"
                } else {
                    "DISAGREEMENT: at least one converged route is outside its bound"
                }
            ));
            if let Some(ms) = r.elapsed_ms {
                out.push_str(&format!("elapsed_ms {ms}\n"));
            }
            out
        }
    }
}

pub fn convergence(rows: &[ConvergenceRecord], format: Format) -> String {
    match format {
        Format::Json => json(rows),
        Format::Csv => {
            if rows.is_empty() {
                "k,partial_sum,increment_abs,error_vs_reference\n".into()
            } else {
                csv(rows)
            }
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.partial_sum.len()).max().unwrap_or(11).max(11);
            let mut out = format!(
                "{:>8}  {:<width$}  {:>13}  {:>13}\n",
                "k", "partial_sum", "increment", "error"
            );
            for r in rows {
                out.push_str(&format!(
                    "{:>8}  {:<width$}  {:>13}  {:>13}\n",
                    r.k, r.partial_sum, r.increment_abs, r.error_vs_reference
                ));
            }
            out
        }
    }
}

pub fn verify(rows: &[VerifyRecord], format: Format) -> String {
    match format {
        Format::Json => json(rows),
        Format::Csv => csv(rows),
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                out.push_str(&format!(
                    "{} (k_or_s = {}): {}\n  rel_error {}  threshold {}  oracle_bound {}\n  lhs {}\n  rhs {}\n",
                    r.identity_name,
                    r.k_or_s,
                    r.verdict,
                    sci(r.rel_error),
                    sci(r.threshold),
                    sci(r.oracle_bound),
                    r.lhs,
                    r.rhs
                ));
                if let (Some(e), Some(v)) = (r.corrected_rel_error, &r.corrected_verdict) {
                    out.push_str(&format!("  corrected form: rel_error {}  {v}\n", sci(e)));
                }
                out.push_str(&format!("  notes: {}\n\n", r.notes));
            }
            let mismatches = rows.iter().filter(|r| r.verdict != "match").count();
            out.push_str(&format!("{} reports, {} mismatch\n", rows.len(), mismatches));
            out
        }
    }
}
