//! Tabular output (CSV, JSON, Markdown) and golden verification reports.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::engine::Engine;
use crate::golden::{Family, GoldenRecord};
use crate::memo::CuspVariant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    /// Small index, emitted as a JSON number.
    Index(i64),
    /// Arbitrary-size integer, emitted as a JSON string.
    Big(String),
    Text(String),
    Flag(bool),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Index(v) => v.to_string(),
            Cell::Big(s) | Cell::Text(s) => s.clone(),
            Cell::Flag(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Index(v) => Value::from(*v),
            Cell::Big(s) | Cell::Text(s) => Value::from(s.as_str()),
            Cell::Flag(b) => Value::from(*b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
            Format::Markdown => self.to_markdown(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.columns.iter().map(|c| csv_field(c)).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| csv_field(&c.plain())).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::Array(rows)).expect("json serialization");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "| {} |", self.columns.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(self.columns.len()));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::plain).collect();
            let _ = writeln!(out, "| {} |", cells.join(" | "));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub family: Family,
    pub params: Vec<i64>,
    /// Decimal value, or the error message if the computation failed.
    pub computed: Result<String, String>,
    pub expected: Option<String>,
    pub matches: bool,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    pub elapsed: Duration,
}

impl Report {
    pub fn total(&self) -> usize {
        self.rows.len()
    }

    pub fn matched(&self) -> usize {
        self.rows.iter().filter(|r| r.matches).count()
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    pub fn all_match(&self) -> bool {
        self.matched() == self.total()
    }

    /// Row table without timing, so repeated runs render identically.
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["family", "params", "computed", "expected", "match"]);
        for r in &self.rows {
            let params: Vec<String> = r.params.iter().map(i64::to_string).collect();
            t.push(vec![
                Cell::Text(r.family.to_string()),
                Cell::Text(params.join(" ")),
                match &r.computed {
                    Ok(v) => Cell::Big(v.clone()),
                    Err(e) => Cell::Text(format!("error: {e}")),
                },
                Cell::Big(r.expected.clone().unwrap_or_default()),
                Cell::Flag(r.matches),
            ]);
        }
        t
    }

    pub fn summary(&self) -> String {
        if self.all_match() {
            format!("all {} golden records match ({:.2?})", self.total(), self.elapsed)
        } else {
            format!(
                "{} of {} golden records match; {} mismatched ({:.2?})",
                self.matched(),
                self.total(),
                self.total() - self.matched(),
                self.elapsed
            )
        }
    }
}

fn evaluate_record(engine: &Engine, variant: CuspVariant, record: &GoldenRecord) -> ReportRow {
    let computed = record
        .family
        .evaluate(engine, variant, record.params)
        .map(|v| v.to_string())
        .map_err(|e| e.to_string());
    let matches = computed.as_deref() == Ok(record.expected);
    ReportRow {
        family: record.family,
        params: record.params.to_vec(),
        computed,
        expected: Some(record.expected.to_string()),
        matches,
    }
}

/// Evaluates every record. With `parallel`, records are evaluated on the
/// rayon pool against the shared memo store; row order is unaffected.
pub fn verify(engine: &Engine, variant: CuspVariant, records: &[GoldenRecord], parallel: bool) -> Report {
    let start = Instant::now();
    let rows = if parallel {
        records.par_iter().map(|r| evaluate_record(engine, variant, r)).collect()
    } else {
        records.iter().map(|r| evaluate_record(engine, variant, r)).collect()
    };
    Report { rows, elapsed: start.elapsed() }
}
