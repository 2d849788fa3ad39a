use bratteli_core::{Error, Result};
use clap::ValueEnum;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Csv,
    Dot,
    Text,
}

/// Every command prepares all the formats it supports; the caller picks one.
pub struct Rendered {
    json: Value,
    text: String,
    csv: Option<String>,
    dot: Option<String>,
}

impl Rendered {
    pub fn new(json: Value, text: String) -> Self {
        Rendered {
            json,
            text,
            csv: None,
            dot: None,
        }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn with_dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    pub fn resolve(self, emit: Emit) -> Result<String> {
        match emit {
            Emit::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)
                    .expect("in-memory value serializes");
                s.push('\n');
                Ok(s)
            }
            Emit::Text => {
                let mut s = self.text;
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                Ok(s)
            }
            Emit::Csv => self
                .csv
                .ok_or_else(|| Error::input("csv output is not available for this command")),
            Emit::Dot => self
                .dot
                .ok_or_else(|| Error::input("dot output is only available for graphs")),
        }
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn rat_str(r: &BigRational) -> String {
    r.to_string()
}

pub fn rat_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("rational fits f64 range")
}

pub fn rat_list_json(rs: &[BigRational]) -> Value {
    Value::Array(rs.iter().map(|r| Value::String(rat_str(r))).collect())
}
