//! Tables of exact values, rendered as `p/q` plus a 6-place decimal.

use std::fmt::Write;

use serde_json::{json, Value};

use super::{format_decimal, format_ratio, recurrence_table, vsn_closed_form, vsn_sum, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Csv,
    Json,
}

/// One row of the analysis table. The spiral columns are empty below n = 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisRow {
    pub n: usize,
    pub vsn_sum: Option<Rational>,
    pub vsn_closed_form: Option<Rational>,
    pub v_bound: Rational,
    pub v_refined: Rational,
    /// `7/3 - v_bound`.
    pub gap: Rational,
}

impl AnalysisRow {
    /// Whether the two spiral expressions disagree at this n.
    pub fn discrepancy(&self) -> bool {
        self.vsn_sum != self.vsn_closed_form
    }
}

pub fn analysis_rows(n_max: usize) -> Result<Vec<AnalysisRow>> {
    if n_max < 3 {
        return Err(Error::Argument("n_max must be at least 3".into()));
    }
    let table = recurrence_table(n_max)?;
    let limit = super::RecurrenceTable::limit();
    (0..=n_max)
        .map(|n| {
            let spiral = |f: fn(u32) -> Result<Rational>| match n {
                0..=2 => Ok(None),
                _ => f(n as u32).map(Some),
            };
            Ok(AnalysisRow {
                n,
                vsn_sum: spiral(vsn_sum)?,
                vsn_closed_form: spiral(vsn_closed_form)?,
                v_bound: table.values[n].clone(),
                v_refined: table.refined[n].clone(),
                gap: &limit - &table.values[n],
            })
        })
        .collect()
}

const COLUMNS: [&str; 5] = ["vsn_sum", "vsn_closed_form", "v_bound", "v_refined", "gap"];

fn cells(row: &AnalysisRow) -> [Option<&Rational>; 5] {
    [
        row.vsn_sum.as_ref(),
        row.vsn_closed_form.as_ref(),
        Some(&row.v_bound),
        Some(&row.v_refined),
        Some(&row.gap),
    ]
}

fn flag(row: &AnalysisRow) -> &'static str {
    match (row.n, row.discrepancy()) {
        (0..=2, _) => "",
        (_, true) => "yes",
        (_, false) => "no",
    }
}

pub fn render(rows: &[AnalysisRow], format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => render_text(rows),
        ReportFormat::Csv => render_csv(rows),
        ReportFormat::Json => {
            let mut s = serde_json::to_string(&rows_json(rows)).expect("table serializes");
            s.push('\n');
            s
        }
    }
}

fn render_csv(rows: &[AnalysisRow]) -> String {
    let mut out = String::from("n");
    for c in COLUMNS {
        write!(out, ",{c},{c}_decimal").unwrap();
        if c == "vsn_closed_form" {
            out.push_str(",discrepancy");
        }
    }
    out.push('\n');
    for row in rows {
        write!(out, "{}", row.n).unwrap();
        for (c, cell) in COLUMNS.iter().zip(cells(row)) {
            match cell {
                Some(r) => write!(out, ",{},{}", format_ratio(r), format_decimal(r, 6)).unwrap(),
                None => out.push_str(",,"),
            }
            if *c == "vsn_closed_form" {
                write!(out, ",{}", flag(row)).unwrap();
            }
        }
        out.push('\n');
    }
    out
}

fn render_text(rows: &[AnalysisRow]) -> String {
    let header = [
        "n",
        "vsn_sum",
        "closed_form",
        "differ",
        "V(n)",
        "refined",
        "7/3-V(n)",
    ];
    let body: Vec<[String; 7]> = rows
        .iter()
        .map(|row| {
            let show = |r: Option<&Rational>| {
                r.map_or_else(String::new, |r| {
                    format!("{} ({})", format_ratio(r), format_decimal(r, 6))
                })
            };
            let c = cells(row);
            [
                row.n.to_string(),
                show(c[0]),
                show(c[1]),
                flag(row).to_string(),
                show(c[2]),
                show(c[3]),
                show(c[4]),
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for line in &body {
        for (w, cell) in width.iter_mut().zip(line) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut emit = |line: &[&str]| {
        let parts: Vec<String> = line
            .iter()
            .zip(width)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    emit(&header);
    for line in &body {
        emit(&line.each_ref().map(String::as_str));
    }
    out
}

fn exact(r: Option<&Rational>) -> Value {
    r.map_or(
        Value::Null,
        |r| json!({ "exact": format_ratio(r), "decimal": format_decimal(r, 6) }),
    )
}

/// The table as a JSON array of row objects.
pub fn rows_json(rows: &[AnalysisRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                let c = cells(row);
                json!({
                    "n": row.n,
                    "vsn_sum": exact(c[0]),
                    "vsn_closed_form": exact(c[1]),
                    "discrepancy": (row.n >= 3).then(|| row.discrepancy()),
                    "v_bound": exact(c[2]),
                    "v_refined": exact(c[3]),
                    "gap": exact(c[4]),
                })
            })
            .collect(),
    )
}
