//! Manifest, CSV and JSON writers.

use std::fmt::Write as _;

use photon_lab::CONSTANT_SET;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;

pub const TOOL_VERSION: &str = concat!("photon-lab ", env!("CARGO_PKG_VERSION"));

/// Floats carry 17 significant digits everywhere.
pub fn float(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub command: String,
    pub argv: Vec<String>,
    pub constant_set: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<&'static str>,
    pub tool_version: &'static str,
    pub options: Value,
}

impl Manifest {
    pub fn new(command: String, argv: Vec<String>, options: Value) -> Self {
        Manifest {
            command,
            argv,
            constant_set: CONSTANT_SET,
            seed: None,
            generator: None,
            tool_version: TOOL_VERSION,
            options,
        }
    }
}

/// A residual compared against a tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub residual: f64,
    pub tolerance: f64,
    /// `upper`: pass when residual <= tolerance; `lower`: residual >= tolerance.
    pub bound: &'static str,
    pub pass: bool,
}

impl Check {
    pub fn at_most(name: impl Into<String>, value: f64, residual: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            value,
            residual,
            tolerance,
            bound: "upper",
            pass: residual <= tolerance,
        }
    }

    pub fn at_least(name: impl Into<String>, value: f64, residual: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            value,
            residual,
            tolerance,
            bound: "lower",
            pass: residual >= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    F(f64),
    U(u64),
    I(i64),
    S(String),
    B(bool),
    Empty,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::F(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::F)
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::U(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::U(x as u64)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::I(x)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::B(x)
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::S(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::S(x.to_string())
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::F(x) => float(*x),
            Cell::U(x) => x.to_string(),
            Cell::I(x) => x.to_string(),
            Cell::B(x) => x.to_string(),
            Cell::S(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::S(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn of_checks(checks: &[Check]) -> Self {
        let mut t = Table::new(&["name", "value", "residual", "tolerance", "bound", "pass"]);
        for c in checks {
            t.push(vec![
                c.name.as_str().into(),
                c.value.into(),
                c.residual.into(),
                c.tolerance.into(),
                c.bound.into(),
                c.pass.into(),
            ]);
        }
        t
    }
}

/// What a subcommand hands back for emission.
#[derive(Debug, Default)]
pub struct Report {
    pub body: Map<String, Value>,
    pub table: Option<Table>,
    pub checks: Vec<Check>,
    pub seed: Option<u64>,
    pub generator: Option<&'static str>,
}

impl Report {
    pub fn new(body: impl Serialize) -> anyhow::Result<Self> {
        let body = match serde_json::to_value(body)? {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        Ok(Report {
            body,
            ..Report::default()
        })
    }

    pub fn with_table(mut self, t: Table) -> Self {
        self.table = Some(t);
        self
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.checks = checks;
        self
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => match (n.as_u64(), n.as_i64(), n.as_f64()) {
            (Some(u), _, _) if !n.is_f64() => u.to_string(),
            (_, Some(i), _) if !n.is_f64() => i.to_string(),
            (_, _, Some(f)) => float(f),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(scalar).collect::<Vec<_>>().join(","),
        Value::Object(_) => compact(v),
    }
}

fn compact(v: &Value) -> String {
    let mut s = String::new();
    write_json(&mut s, v, None, 0);
    s
}

fn write_json(out: &mut String, v: &Value, indent: Option<usize>, depth: usize) {
    let newline = |out: &mut String, d: usize| {
        if let Some(w) = indent {
            out.push('\n');
            out.extend(std::iter::repeat(' ').take(w * d));
        }
    };
    let sep = if indent.is_some() { ": " } else { ":" };
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) if n.is_f64() => {
            let f = n.as_f64().unwrap_or(f64::NAN);
            if f.is_finite() {
                out.push_str(&float(f));
            } else {
                out.push_str("null");
            }
        }
        Value::Number(n) => out.push_str(&n.to_string()),
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(a) if a.is_empty() => out.push_str("[]"),
        Value::Array(a) => {
            out.push('[');
            for (i, x) in a.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                newline(out, depth + 1);
                write_json(out, x, indent, depth + 1);
            }
            newline(out, depth);
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push('{');
            for (i, (k, x)) in m.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                newline(out, depth + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(sep);
                write_json(out, x, indent, depth + 1);
            }
            newline(out, depth);
            out.push('}');
        }
    }
}

pub fn render(manifest: &Manifest, report: &Report, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => render_json(manifest, report),
        Format::Csv => render_csv(manifest, report),
    }
}

fn render_json(manifest: &Manifest, report: &Report) -> anyhow::Result<String> {
    let mut body = report.body.clone();
    if !report.checks.is_empty() {
        body.insert("checks".into(), serde_json::to_value(&report.checks)?);
        body.insert("pass".into(), Value::Bool(report.failed().is_empty()));
    }
    let mut root = Map::new();
    root.insert("manifest".into(), serde_json::to_value(manifest)?);
    root.insert("report".into(), Value::Object(body));
    let mut out = String::new();
    write_json(&mut out, &Value::Object(root), Some(2), 0);
    out.push('\n');
    Ok(out)
}

fn render_csv(manifest: &Manifest, report: &Report) -> anyhow::Result<String> {
    let table = report.table.as_ref().ok_or_else(|| {
        crate::UsageError(format!("csv output is not available for `{}`; use --format json", manifest.command))
    })?;
    let mut out = String::new();
    let line = |out: &mut String, k: &str, v: &str| {
        let _ = writeln!(out, "# {k}={}", v.replace('\n', " "));
    };
    line(&mut out, "command", &manifest.command);
    line(&mut out, "argv", &manifest.argv.join(" "));
    line(&mut out, "constant_set", manifest.constant_set);
    if let Some(s) = manifest.seed {
        line(&mut out, "seed", &s.to_string());
    }
    if let Some(g) = manifest.generator {
        line(&mut out, "generator", g);
    }
    line(&mut out, "tool_version", manifest.tool_version);
    if let Value::Object(opts) = &manifest.options {
        for (k, v) in opts {
            line(&mut out, &format!("option.{k}"), &scalar(v));
        }
    }
    if !report.checks.is_empty() {
        let failed = report.failed();
        line(&mut out, "pass", &failed.is_empty().to_string());
        if !failed.is_empty() {
            line(&mut out, "failed_checks", &failed.join(";"));
        }
    }
    out.push_str(&table.header.join(","));
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(Cell::csv).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn float_text_round_trips(bits in any::<u64>()) {
            let x = f64::from_bits(bits);
            prop_assume!(x.is_finite());
            let s = float(x);
            prop_assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits());
            let mantissa = s.split_once('e').unwrap().0;
            prop_assert_eq!(mantissa.trim_start_matches('-').replace('.', "").len(), 17);
        }
    }

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(float(0.1), "1.0000000000000001e-1");
        assert_eq!(float(-2.5e10), "-2.5000000000000000e10");
        for x in [0.1, 1.0 / 3.0, 6.62607015e-34, f64::MAX, f64::MIN_POSITIVE] {
            assert_eq!(float(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn json_keeps_integers_and_nulls_non_finite() {
        let v = serde_json::json!({"a": 3u64, "b": 1.5, "c": [true, null], "d": {}});
        let mut s = String::new();
        write_json(&mut s, &v, None, 0);
        assert_eq!(s, r#"{"a":3,"b":1.5000000000000000e0,"c":[true,null],"d":{}}"#);
    }

    #[test]
    fn empty_table_is_header_only() {
        let m = Manifest::new("spectrum".into(), vec!["photon-lab".into()], serde_json::json!({}));
        let r = Report::new(serde_json::json!({}))
            .unwrap()
            .with_table(Table::new(&["nu_hz", "u_j_per_m3_hz"]));
        let s = render(&m, &r, Format::Csv).unwrap();
        assert!(s.ends_with("\nnu_hz,u_j_per_m3_hz\n"));
        assert!(!s.contains('\r'));
    }

    #[test]
    fn csv_quotes_delimiters() {
        assert_eq!(Cell::from("a,b").csv(), "\"a,b\"");
        assert_eq!(Cell::Empty.csv(), "");
    }

    #[test]
    fn checks_bound_direction() {
        assert!(Check::at_most("x", 1.0, 1e-7, 1e-6).pass);
        assert!(!Check::at_most("x", 1.0, f64::NAN, 1e-6).pass);
        assert!(Check::at_least("r", 1.0, 16.0, 8.0).pass);
        assert!(!Check::at_least("r", 1.0, 4.0, 8.0).pass);
    }
}
