use std::fmt::Write as _;
use std::path::Path;

use serde_json::Value;

use crate::args::Format;
use crate::CliError;

/// A command's result in both output formats.
pub struct Report {
    pub json: Value,
    pub table: Table,
}

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| quote(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn quote(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

pub fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.table.to_csv(),
        }
    }
}

/// One JSON document per line.
pub fn json_lines<T: serde::Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        let line = serde_json::to_string(item).expect("records serialize");
        writeln!(out, "{line}").expect("writing to a string");
    }
    out
}

pub fn write(path: Option<&Path>, stdout: &mut dyn std::io::Write, text: &str) -> Result<(), CliError> {
    let (result, name) = match path {
        Some(p) => (std::fs::write(p, text), p.display().to_string()),
        None => (stdout.write_all(text.as_bytes()), "standard output".to_string()),
    };
    result.map_err(|source| CliError::Io { path: name, source })
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
