//! JSON and CSV rendering of a verification report.
//!
//! Values are written with 17 significant digits, errors with 3. Keys are
//! sorted. The `generated_at` line is the only part that changes between
//! runs of the same grid.

use msm_core::audit::AuditEntry;
use msm_core::Complex64;
use serde_json::{json, Map, Number, Value};

use crate::grid::side_name;
use crate::verify::{CaseReport, PairStatus, Report, RouteResult};

fn num(v: f64, digits: usize) -> Value {
    if !v.is_finite() {
        return Value::Null;
    }
    let text = format!("{:.*e}", digits - 1, v);
    Value::Number(text.parse::<Number>().expect("formatted float is a JSON number"))
}

pub fn value_number(v: f64) -> Value {
    num(v, 17)
}

pub fn error_number(v: f64) -> Value {
    num(v, 3)
}

fn complex(z: Complex64) -> Value {
    json!({ "re": value_number(z.re), "im": value_number(z.im) })
}

fn status(s: PairStatus) -> &'static str {
    match s {
        PairStatus::Pass => "pass",
        PairStatus::Fail => "fail",
        PairStatus::Skipped => "skipped",
    }
}

fn audit_json(e: &AuditEntry, tol: f64) -> Value {
    let side = |r: &msm_core::Result<Complex64>| match r {
        Ok(z) => complex(*z),
        Err(err) => json!({ "error": err.to_string() }),
    };
    json!({
        "name": e.name,
        "lhs": e.lhs,
        "transcription": e.transcription,
        "printed": side(&e.printed),
        "derived": side(&e.derived),
        "relative_error": e.relative_error().map_or(Value::Null, error_number),
        "agrees": e.agrees(tol),
    })
}

fn case_json(c: &CaseReport) -> Value {
    let mut inputs = Map::new();
    for (name, v) in c.case.point.named() {
        inputs.insert(name.to_string(), complex(v));
    }
    let mut routes = Map::new();
    for (name, r) in &c.routes {
        let v = match r {
            RouteResult::Value(v) => json!({
                "value": complex(v.value),
                "terms_used": v.terms_used,
                "converged": v.converged,
                "tail_estimate": v.tail_estimate.map_or(Value::Null, error_number),
            }),
            RouteResult::Error(e) => json!({ "error": e.to_string() }),
            RouteResult::Skipped(why) => json!({ "skipped": why }),
        };
        routes.insert(name.to_string(), v);
    }
    let pairs: Vec<Value> = c
        .pairs
        .iter()
        .map(|p| {
            let mut m = Map::new();
            m.insert("pair".into(), json!(p.name));
            m.insert("error".into(), p.error.map_or(Value::Null, error_number));
            m.insert("tolerance".into(), error_number(p.tolerance));
            m.insert("status".into(), json!(status(p.status)));
            if let Some(note) = &p.note {
                m.insert("note".into(), json!(note));
            }
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("index".into(), json!(c.case.index));
    m.insert("kind".into(), json!(c.case.kind.to_string()));
    m.insert("side".into(), json!(side_name(c.case.side)));
    m.insert("inputs".into(), Value::Object(inputs));
    m.insert("routes".into(), Value::Object(routes));
    m.insert("pairs".into(), Value::Array(pairs));
    m.insert("pass".into(), json!(c.passed()));
    if let Some(t) = c.wall_time {
        m.insert("wall_time_ms".into(), error_number(t.as_secs_f64() * 1e3));
    }
    Value::Object(m)
}

/// Audit threshold: a printed formula "agrees" when within this of the derived value.
pub const AUDIT_TOLERANCE: f64 = 1e-8;

pub fn to_json(report: &Report, generated_at: &str) -> String {
    let mut summary = Map::new();
    summary.insert("expanded".into(), json!(report.expanded));
    summary.insert("cases".into(), json!(report.cases.len()));
    summary.insert("failures".into(), json!(report.failures()));
    let mut max = Map::new();
    for (pair, e) in report.max_errors() {
        max.insert(pair, e.map_or(Value::Null, error_number));
    }
    summary.insert("max_error".into(), Value::Object(max));

    let audit: Vec<Value> = report
        .cases
        .iter()
        .filter(|c| !c.audit.is_empty())
        .map(|c| {
            let mismatches: Vec<&str> =
                c.audit.iter().filter(|e| !e.agrees(AUDIT_TOLERANCE)).map(|e| e.name.as_str()).collect();
            json!({
                "case": c.case.index,
                "entries": c.audit.iter().map(|e| audit_json(e, AUDIT_TOLERANCE)).collect::<Vec<_>>(),
                "mismatches": mismatches,
            })
        })
        .collect();

    let doc = json!({
        "generated_at": generated_at,
        "config": {
            "series_tolerance": error_number(report.series_tolerance),
            "quadrature_tolerance": error_number(report.quadrature_tolerance),
            "quadrature_nodes": report.quadrature_nodes,
            "seed": report.seed,
            "audit_tolerance": error_number(AUDIT_TOLERANCE),
        },
        "summary": summary,
        "cases": report.cases.iter().map(case_json).collect::<Vec<_>>(),
        "printed_formula_audit": audit,
        "warnings": report.warnings,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

/// One row per case per route pair.
pub fn to_csv(report: &Report) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["case", "kind", "side", "pair", "error", "tolerance", "status"])?;
    for c in &report.cases {
        for p in &c.pairs {
            w.write_record([
                c.case.index.to_string(),
                c.case.kind.to_string(),
                side_name(c.case.side).to_string(),
                p.name.clone(),
                p.error.map_or(String::new(), |e| format!("{e:.2e}")),
                format!("{:.2e}", p.tolerance),
                status(p.status).to_string(),
            ])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}
