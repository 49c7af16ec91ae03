//! Table, CSV, and JSON renderings of reports and simple listings.

use std::fmt::Write as _;

use clap::ValueEnum;
use sdcheck_core::exact::fmt_ratio;
use sdcheck_core::report::Report;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

/// A plain grid of strings with named columns.
#[derive(Clone, Debug, Default)]
pub struct Grid {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Grid {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Self {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => aligned(&self.headers, &self.rows),
            Format::Csv => csv_text(&self.headers, &self.rows),
            Format::Json => {
                let objects: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let map: Map<String, Value> = self
                            .headers
                            .iter()
                            .zip(row)
                            .map(|(h, v)| (h.to_string(), Value::String(v.clone())))
                            .collect();
                        Value::Object(map)
                    })
                    .collect();
                pretty(&Value::Array(objects))
            }
        }
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn aligned(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(headers.to_vec(), &mut out);
    for row in rows {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

fn csv_text(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory csv");
    for row in rows {
        w.write_record(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn set_text(xs: &[u32]) -> String {
    let items: Vec<String> = xs.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(","))
}

const GATE_HEADERS: [&str; 8] = [
    "family", "m", "t", "u", "F", "quotient", "integral", "verdict",
];

fn gate_rows(report: &Report) -> Vec<Vec<String>> {
    report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.family.to_string(),
                r.m.to_string(),
                r.t.to_string(),
                r.u.to_string(),
                r.f.to_string(),
                fmt_ratio(&r.quotient),
                r.integral.to_string(),
                r.verdict.label().to_string(),
            ]
        })
        .collect()
}

pub fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => pretty(report),
        Format::Csv => report_csv(report),
        Format::Table => report_table(report),
    }
}

fn report_table(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "report: {}", report.id);
    if let Some(ts) = &report.generated_at {
        let _ = writeln!(out, "generated_at: {ts}");
    }
    for (k, v) in &report.inputs {
        let _ = writeln!(out, "{k}: {v}");
    }
    if !report.sets.is_empty() {
        out.push('\n');
        for s in &report.sets {
            let _ = writeln!(
                out,
                "{} ({}): {}",
                s.name,
                s.members.len(),
                set_text(&s.members)
            );
        }
    }
    if !report.rows.is_empty() {
        out.push('\n');
        out.push_str(&aligned(&GATE_HEADERS, &gate_rows(report)));
    }
    if !report.checks.is_empty() {
        out.push('\n');
        for c in &report.checks {
            if c.pass {
                let _ = writeln!(out, "PASS  {}", c.name);
            } else {
                let _ = writeln!(out, "FAIL  {}", c.diff());
            }
        }
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "surviving ({}): {}",
        report.surviving_set.len(),
        set_text(&report.surviving_set)
    );
    out
}

/// One CSV table for the whole report; `record` says which columns apply.
fn report_csv(report: &Report) -> String {
    let headers = [
        "record", "name", "family", "m", "t", "u", "F", "quotient", "verdict", "expected", "actual",
    ];
    let blank = || String::new();
    let mut rows = Vec::new();
    for (k, v) in &report.inputs {
        let mut row = vec!["input".into(), k.clone()];
        row.extend(std::iter::repeat_with(blank).take(8));
        row.push(v.clone());
        rows.push(row);
    }
    for s in &report.sets {
        for m in &s.members {
            let mut row = vec!["set".into(), s.name.clone(), blank(), m.to_string()];
            row.extend(std::iter::repeat_with(blank).take(7));
            rows.push(row);
        }
    }
    for r in &report.rows {
        rows.push(vec![
            "gate".into(),
            blank(),
            r.family.to_string(),
            r.m.to_string(),
            r.t.to_string(),
            r.u.to_string(),
            r.f.to_string(),
            fmt_ratio(&r.quotient),
            r.verdict.label().into(),
            blank(),
            blank(),
        ]);
    }
    for c in &report.checks {
        let mut row = vec![
            if c.pass { "check_pass" } else { "check_fail" }.to_string(),
            c.name.clone(),
        ];
        row.extend(std::iter::repeat_with(blank).take(7));
        row.push(c.expected.to_string());
        row.push(c.actual.to_string());
        rows.push(row);
    }
    for m in &report.surviving_set {
        let mut row = vec!["surviving".into(), blank(), blank(), m.to_string()];
        row.extend(std::iter::repeat_with(blank).take(7));
        rows.push(row);
    }
    csv_text(&headers, &rows)
}
