//! Output records with matching CSV and JSON renderings.
//!
//! Every subcommand reports rows through [`Record`], so the two output
//! formats stay field-for-field identical: CSV gets a header naming the
//! fields in order, JSON gets one object per line repeating the same names
//! in the same order. List-valued fields (the spectrum) become a single
//! space-separated CSV cell and a JSON array.

use std::io::Write;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
enum Value {
    Int(u64),
    Float(f64),
    Text(String),
    Floats(Vec<f64>),
}

#[derive(Debug, Clone, Default)]
pub struct Record {
    fields: Vec<(&'static str, Value)>,
}

impl Record {
    pub fn new() -> Record {
        Record::default()
    }

    pub fn int(mut self, name: &'static str, v: u64) -> Record {
        self.fields.push((name, Value::Int(v)));
        self
    }

    pub fn float(mut self, name: &'static str, v: f64) -> Record {
        self.fields.push((name, Value::Float(v)));
        self
    }

    pub fn text(mut self, name: &'static str, v: impl Into<String>) -> Record {
        self.fields.push((name, Value::Text(v.into())));
        self
    }

    pub fn floats(mut self, name: &'static str, v: Vec<f64>) -> Record {
        self.fields.push((name, Value::Floats(v)));
        self
    }

    fn names(&self) -> Vec<&'static str> {
        self.fields.iter().map(|(name, _)| *name).collect()
    }

    fn csv_cells(&self) -> Vec<String> {
        self.fields
            .iter()
            .map(|(_, v)| match v {
                Value::Int(x) => x.to_string(),
                Value::Float(x) => x.to_string(),
                Value::Text(s) => s.clone(),
                Value::Floats(xs) => xs
                    .iter()
                    .map(f64::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
            })
            .collect()
    }

    fn json_line(&self) -> String {
        let body: Vec<String> = self
            .fields
            .iter()
            .map(|(name, v)| format!("{}:{}", json_string(name), json_value(v)))
            .collect();
        format!("{{{}}}", body.join(","))
    }
}

fn json_string(s: &str) -> String {
    serde_json::Value::from(s).to_string()
}

fn json_number(x: f64) -> String {
    // All reported quantities are finite by construction; the fallback only
    // keeps a hypothetical non-finite value from producing invalid JSON.
    serde_json::Number::from_f64(x)
        .map(|n| n.to_string())
        .unwrap_or_else(|| "null".to_string())
}

fn json_value(v: &Value) -> String {
    match v {
        Value::Int(x) => x.to_string(),
        Value::Float(x) => json_number(*x),
        Value::Text(s) => json_string(s),
        Value::Floats(xs) => {
            let body: Vec<String> = xs.iter().map(|&x| json_number(x)).collect();
            format!("[{}]", body.join(","))
        }
    }
}

/// Renders records to bytes. A comment line, when given, precedes the CSV
/// header; JSON output never carries comments, so anything a consumer needs
/// must also live in the records themselves.
pub fn render(records: &[Record], format: Format, comment: Option<&str>) -> Result<Vec<u8>, CliError> {
    let mut out = Vec::new();
    match format {
        Format::Csv => {
            if let Some(text) = comment {
                writeln!(out, "# {text}").expect("writing to a Vec cannot fail");
            }
            let mut w = csv::Writer::from_writer(out);
            if let Some(first) = records.first() {
                let names = first.names();
                w.write_record(&names)
                    .expect("writing to a Vec cannot fail");
                for r in records {
                    debug_assert_eq!(r.names(), names, "records in one table share a schema");
                    w.write_record(r.csv_cells())
                        .expect("writing to a Vec cannot fail");
                }
            }
            out = w
                .into_inner()
                .expect("flushing an in-memory CSV writer cannot fail");
        }
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.json_line()).expect("writing to a Vec cannot fail");
            }
        }
    }
    Ok(out)
}
