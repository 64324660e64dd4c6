//! Tables written as CSV or JSON.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{Map, Value};

use rqcm::verify::report::number;

use crate::config::Format;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
}

impl Cell {
    /// CSV text; floats carry 17 significant digits.
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) if x.is_finite() => format!("{x:.16e}"),
            Cell::Float(x) => number(*x).as_str().unwrap_or("nan").to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Float(x) => number(*x),
        }
    }
}

/// Rows under named columns. `meta` appears only in the JSON form.
#[derive(Debug, Clone)]
pub struct Table {
    pub meta: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(meta: Value, headers: Vec<String>) -> Self {
        Table {
            meta,
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self.headers.iter().cloned().zip(r.iter().map(Cell::json)).collect();
                Value::Object(obj)
            })
            .collect();
        serde_json::json!({"meta": self.meta, "columns": self.headers, "rows": Value::Array(rows)})
    }

    pub fn write_csv(&self, out: impl Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.headers)?;
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::csv))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write(&self, format: Format, out: Option<&Path>) -> Result<(), CliError> {
        let mut sink = open(out)?;
        match format {
            Format::Csv => self.write_csv(&mut sink)?,
            Format::Json => write_json(&self.to_json(), &mut sink)?,
        }
        sink.flush()?;
        Ok(())
    }
}

pub fn open(out: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn write_json(value: &Value, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Single-line JSON, for large verification reports.
pub fn write_json_compact(value: &Value, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_floats_round_trip() {
        let x = 0.1 + 0.2;
        let text = Cell::Float(x).csv();
        assert_eq!(text.parse::<f64>().unwrap(), x);
        assert_eq!(Cell::Float(f64::INFINITY).csv(), "inf");
    }

    #[test]
    fn json_rows_are_keyed_by_header() {
        let mut t = Table::new(Value::Null, vec!["n".into(), "sigma".into()]);
        t.push(vec![Cell::Int(2), Cell::Float(3.5)]);
        let v = t.to_json();
        assert_eq!(v["rows"][0]["n"], 2);
        assert_eq!(v["rows"][0]["sigma"], 3.5);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,sigma\n2,3.5000000000000000e0\n");
    }
}
