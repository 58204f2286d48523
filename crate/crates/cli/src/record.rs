use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::query::{Format, Query};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub orders: Vec<i64>,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything reported for one query. Counts are decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub query: Query,
    pub degree: Option<i64>,
    pub result: Option<String>,
    pub methods: BTreeMap<String, String>,
    pub agreed: Option<bool>,
    pub factor: Option<String>,
    pub padded_result: Option<String>,
    pub results: Vec<TableRow>,
    pub properties: Vec<PropertyRow>,
    pub elapsed_ms: f64,
}

impl ResultRecord {
    pub fn new(query: Query) -> Self {
        Self {
            query,
            degree: None,
            result: None,
            methods: BTreeMap::new(),
            agreed: None,
            factor: None,
            padded_result: None,
            results: Vec::new(),
            properties: Vec::new(),
            elapsed_ms: 0.0,
        }
    }
}

pub fn emit(r: &ResultRecord, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("record serializes");
            s.push('\n');
            s
        }
        Format::Text => emit_text(r),
        Format::Csv => emit_csv(r),
    }
}

fn emit_text(r: &ResultRecord) -> String {
    let mut s = String::new();
    match r.query.subcommand.as_str() {
        "table" => {
            let width = r
                .results
                .iter()
                .map(|row| row.count.len())
                .max()
                .unwrap_or(0)
                .max(5);
            let _ = writeln!(
                s,
                "{:>3} {:>3} {:>3} {:>3}  {:>width$}",
                "d1", "d2", "d3", "d4", "count"
            );
            for row in &r.results {
                for o in &row.orders {
                    let _ = write!(s, "{o:>3} ");
                }
                let _ = writeln!(s, " {:>width$}", row.count);
            }
        }
        "verify" => {
            for p in &r.properties {
                let tag = if p.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{tag} {}: {}", p.name, p.detail);
            }
            let passed = r.properties.iter().filter(|p| p.passed).count();
            let _ = writeln!(s, "{passed}/{} properties passed", r.properties.len());
        }
        _ => {
            let mut lines: Vec<(String, String)> = Vec::new();
            if let Some(v) = &r.result {
                lines.push(("result".into(), v.clone()));
            }
            if let Some(d) = r.degree {
                lines.push(("degree".into(), d.to_string()));
            }
            if r.methods.len() > 1 {
                for (m, v) in &r.methods {
                    lines.push((m.clone(), v.clone()));
                }
            }
            if let Some(a) = r.agreed {
                lines.push(("agreed".into(), if a { "yes" } else { "NO" }.into()));
            }
            if let Some(f) = &r.factor {
                lines.push(("pad factor".into(), f.clone()));
            }
            if let Some(p) = &r.padded_result {
                lines.push(("padded".into(), p.clone()));
            }
            let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in lines {
                let _ = writeln!(s, "{:<width$}  {v}", format!("{k}:"), width = width + 1);
            }
        }
    }
    s
}

fn csv_field(v: &str) -> String {
    if v.contains([',', '"', '\n']) {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

fn emit_csv(r: &ResultRecord) -> String {
    let mut s = String::new();
    match r.query.subcommand.as_str() {
        "table" => {
            s.push_str("d1,d2,d3,d4,count\n");
            for row in &r.results {
                let orders: Vec<String> = row.orders.iter().map(i64::to_string).collect();
                let _ = writeln!(s, "{},{}", orders.join(","), row.count);
            }
        }
        "verify" => {
            s.push_str("property,status,detail\n");
            for p in &r.properties {
                let tag = if p.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{},{tag},{}", csv_field(&p.name), csv_field(&p.detail));
            }
        }
        _ => {
            s.push_str("query,degree,result,agreed,factor\n");
            let opt = |v: &Option<String>| v.clone().unwrap_or_default();
            let _ = writeln!(
                s,
                "{},{},{},{},{}",
                csv_field(&r.query.to_args().join(" ")),
                r.degree.map(|d| d.to_string()).unwrap_or_default(),
                opt(&r.result),
                r.agreed.map(|a| a.to_string()).unwrap_or_default(),
                opt(&r.factor),
            );
        }
    }
    s
}
