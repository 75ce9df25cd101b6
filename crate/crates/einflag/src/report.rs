//! Rendering of enumeration results and lemma reports: decimal truncation,
//! aligned tables, JSON with exact round-trip data, and flat CSV rows.

use crate::exactmath::{Int, Rational};
use crate::solver::{CoordValue, EinsteinSolution, Enumeration, LemmaReport};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::fmt::Write as _;

/// Output format selector shared by the command-line front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!(
                "unknown format '{other}' (expected table, json, or csv)"
            )),
        }
    }
}

/// Decimal expansion of `r` truncated toward zero after `digits` fractional
/// digits. Deterministic: no rounding, no trailing-zero trimming.
pub fn decimal_truncated(r: &Rational, digits: usize) -> String {
    let negative = r.is_negative();
    let abs = r.abs();
    let scale = Int::from(10u32).pow(digits as u32);
    let scaled = (abs.numer() * &scale) / abs.denom();
    let body = scaled.to_string();
    let sign = if negative && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{body}");
    }
    let padded = if body.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - body.len()), body)
    } else {
        body
    };
    let split = padded.len() - digits;
    format!("{sign}{}.{}", &padded[..split], &padded[split..])
}

/// Decimal rendering of a coordinate: exact values directly, intervals via
/// their midpoint.
pub fn coord_decimal(v: &CoordValue, digits: usize) -> String {
    decimal_truncated(&v.midpoint(), digits)
}

/// Exact rendering of a coordinate: `a/b` for rationals, `[lo, hi]` for
/// certified enclosures.
pub fn coord_exact(v: &CoordValue) -> String {
    match v {
        CoordValue::Exact(r) => r.to_string(),
        CoordValue::Interval(i) => i.to_string(),
    }
}

/// JSON value for one coordinate: decimal rendering plus the exact field it
/// can be reproduced from.
pub fn coord_json(v: &CoordValue, digits: usize) -> Value {
    match v {
        CoordValue::Exact(r) => json!({
            "decimal": decimal_truncated(r, digits),
            "rational": r.to_string(),
        }),
        CoordValue::Interval(i) => json!({
            "decimal": decimal_truncated(&i.midpoint(), digits),
            "interval": [i.lo().to_string(), i.hi().to_string()],
        }),
    }
}

/// JSON record for one solution.
pub fn solution_json(idx: usize, sol: &EinsteinSolution, digits: usize) -> Value {
    json!({
        "idx": idx,
        "kind": sol.kind.as_str(),
        "origin": sol.origin.to_string(),
        "x1": coord_json(&sol.metric[0], digits),
        "x2": coord_json(&sol.metric[1], digits),
        "x3": coord_json(&sol.metric[2], digits),
        "x4": coord_json(&sol.metric[3], digits),
        "einstein_constant": coord_json(&sol.einstein_constant, digits),
        "certificate": {
            "positivity": sol.certificate.positivity,
            "residual": sol.certificate.residual.as_str(),
            "width_exp": sol.certificate.width_exp,
        },
    })
}

/// JSON record for one lemma report.
pub fn lemma_json(report: &LemmaReport) -> Value {
    json!({
        "n": report.n,
        "p": report.p,
        "all_pass": report.all_pass(),
        "entries": report
            .entries
            .iter()
            .map(|e| {
                json!({
                    "id": e.id,
                    "title": e.title,
                    "applicable": e.applicable,
                    "pass": e.pass,
                    "detail": e.detail,
                })
            })
            .collect::<Vec<_>>(),
    })
}

/// JSON record for one enumeration, with optional lemma and duality data.
pub fn enumeration_json(
    e: &Enumeration,
    digits: usize,
    lemmas: Option<&LemmaReport>,
    duality: Option<bool>,
) -> Value {
    let mut record = json!({
        "n": e.space.n(),
        "p": e.space.p(),
        "dimensions": e.space.dims().to_vec(),
        "total_dimension": e.space.total_dim(),
        "counts": {
            "total": e.solutions.len(),
            "kahler": e.kahler_count(),
            "non_kahler": e.non_kahler_count(),
        },
        "solutions": e
            .solutions
            .iter()
            .enumerate()
            .map(|(k, s)| solution_json(k + 1, s, digits))
            .collect::<Vec<_>>(),
    });
    let map = record.as_object_mut().expect("record is an object");
    if let Some(report) = lemmas {
        map.insert("lemmas".into(), lemma_json(report));
    }
    if let Some(flag) = duality {
        map.insert("duality_check".into(), json!(flag));
    }
    record
}

/// CSV header matching [`solution_csv_row`].
pub const CSV_HEADER: [&str; 10] = [
    "n",
    "p",
    "idx",
    "kind",
    "x1",
    "x2",
    "x3",
    "x4",
    "einstein_constant",
    "origin",
];

/// One spreadsheet row per solution, exact strings only.
pub fn solution_csv_row(n: i64, p: i64, idx: usize, sol: &EinsteinSolution) -> [String; 10] {
    [
        n.to_string(),
        p.to_string(),
        idx.to_string(),
        sol.kind.as_str().to_string(),
        coord_exact(&sol.metric[0]),
        coord_exact(&sol.metric[1]),
        coord_exact(&sol.metric[2]),
        coord_exact(&sol.metric[3]),
        coord_exact(&sol.einstein_constant),
        sol.origin.to_string(),
    ]
}

/// Human-readable table for one enumeration.
pub fn enumeration_table(e: &Enumeration, digits: usize) -> String {
    let mut out = String::new();
    let n = e.space.n();
    let p = e.space.p();
    let dims = e.space.dims();
    let _ = writeln!(
        out,
        "invariant Einstein metrics for (n, p) = ({n}, {p}); summand dimensions {:?}, total {}",
        dims,
        e.space.total_dim()
    );
    let _ = writeln!(
        out,
        "{} solutions: {} Kaehler, {} non-Kaehler (x1 = 1 normalization)",
        e.solutions.len(),
        e.kahler_count(),
        e.non_kahler_count()
    );
    for (k, sol) in e.solutions.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>3}  {:<10}  x2 = {}  x3 = {}  x4 = {}  e = {}  [{}]",
            k + 1,
            sol.kind.as_str(),
            coord_decimal(&sol.metric[1], digits),
            coord_decimal(&sol.metric[2], digits),
            coord_decimal(&sol.metric[3], digits),
            coord_decimal(&sol.einstein_constant, digits),
            sol.origin
        );
        let exact = format!(
            "x2 = {}, x3 = {}, x4 = {}, e = {}",
            coord_exact(&sol.metric[1]),
            coord_exact(&sol.metric[2]),
            coord_exact(&sol.metric[3]),
            coord_exact(&sol.einstein_constant)
        );
        let _ = writeln!(out, "     exact: {exact}");
    }
    out
}

/// Human-readable table for one lemma report.
pub fn lemma_table(report: &LemmaReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "lemma verdicts for (n, p) = ({}, {}):",
        report.n, report.p
    );
    for entry in &report.entries {
        let _ = writeln!(
            out,
            "  {:<3} {:<4} {}: {}",
            entry.id,
            entry.status(),
            entry.title,
            entry.detail
        );
    }
    out
}
