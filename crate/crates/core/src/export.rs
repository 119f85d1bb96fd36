//! CSV and JSON output with a versioned schema id.
//!
//! CSV files start with one comment line `#schema=queenpoly/<name>/v1`
//! followed by an RFC 4180 header and records. JSON output is a single
//! object `{"schema": .., "records": [..]}` (plus an optional summary).

use std::io::{self, Write};

use serde::Serialize;
use serde_json::{json, Value};

use crate::exactpoly::{Coefficient, ExactPoly};

pub const SCHEMA_VERSION: u32 = 1;

pub fn schema_id(name: &str) -> String {
    format!("queenpoly/{name}/v{SCHEMA_VERSION}")
}

/// One run's output, renderable as either format.
#[derive(Clone, Debug)]
pub struct Document {
    pub schema: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub records: Vec<Value>,
    pub summary: Option<Value>,
}

impl Document {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self {
            schema: schema_id(name),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            records: Vec::new(),
            summary: None,
        }
    }

    pub fn push<S: Serialize>(&mut self, row: Vec<String>, record: &S) {
        self.rows.push(row);
        self.records.push(serde_json::to_value(record).expect("plain data serializes"));
    }

    /// Append `c0..c{n-1}` columns where `n` is the longest trailing run
    /// among rows whose fixed part has `fixed` cells; short rows are padded.
    pub fn pad_coefficients(&mut self, fixed: usize, trailing: &[&str]) {
        let width = self
            .rows
            .iter()
            .map(|r| r.len().saturating_sub(fixed + trailing.len()))
            .max()
            .unwrap_or(0);
        for row in &mut self.rows {
            let tail = row.split_off(row.len() - trailing.len());
            row.resize(fixed + width, String::new());
            row.extend(tail);
        }
        let tail = self.columns.split_off(fixed);
        self.columns.extend((0..width).map(|k| format!("c{k}")));
        self.columns.extend(tail);
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "#schema={}", self.schema)?;
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> io::Result<()> {
        let mut doc = json!({ "schema": self.schema, "records": self.records });
        if let Some(s) = &self.summary {
            doc["summary"] = s.clone();
        }
        serde_json::to_writer_pretty(&mut out, &doc)?;
        writeln!(out)
    }
}

/// Coefficients as exact strings, ascending degree.
pub fn coefficient_cells<R: Coefficient + ToString>(p: &ExactPoly<R>) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

/// Shortest round-trip decimal for a double.
pub fn float_cell(x: f64) -> String {
    format!("{x:?}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::IntPoly;

    #[test]
    fn csv_has_schema_line_and_padding() {
        let mut d = Document::new("demo", &["m", "poly"]);
        for (m, p) in [(0, IntPoly::from_i64s(&[1])), (2, IntPoly::from_i64s(&[147, 2]))] {
            let mut row = vec![m.to_string()];
            row.extend(coefficient_cells(&p));
            row.push(p.pretty("z"));
            d.push(row, &m);
        }
        d.pad_coefficients(1, &["poly"]);
        let mut buf = Vec::new();
        d.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "#schema=queenpoly/demo/v1\nm,c0,c1,poly\r\n0,1,,1\r\n2,147,2,2z+147\r\n"
        );
    }

    #[test]
    fn json_wraps_records() {
        let mut d = Document::new("demo", &["m"]);
        d.push(vec!["3".into()], &json!({"m": 3}));
        let mut buf = Vec::new();
        d.write_json(&mut buf).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["schema"], "queenpoly/demo/v1");
        assert_eq!(v["records"][0]["m"], 3);
    }

    #[test]
    fn floats_round_trip() {
        for x in [0.1, -2.2500001, 1e-300, 12345.678] {
            assert_eq!(float_cell(x).parse::<f64>().unwrap(), x);
        }
    }
}
