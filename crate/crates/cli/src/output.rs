use std::fmt;

use hyperspec::report::SCHEMA_VERSION;
use hyperspec::Error;
use serde_json::{json, Map, Value};

use crate::Format;

/// A command result in every output format. `ok` is false when an internal
/// verification disagreed.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub csv: String,
    pub ok: bool,
}

impl Output {
    pub fn new(command: &str, mut body: Map<String, Value>, text: String, csv: String, ok: bool) -> Self {
        let mut json = Map::new();
        json.insert("schema_version".into(), json!(SCHEMA_VERSION));
        json.insert("command".into(), json!(command));
        json.append(&mut body);
        json.insert("ok".into(), json!(ok));
        Output {
            json: Value::Object(json),
            text,
            csv,
            ok,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.clone(),
            Format::Text => self.text.clone(),
        }
    }
}

pub enum Failure {
    Usage(String),
    Core(Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(Error::BudgetExceeded { .. }) => 3,
            Failure::Core(Error::NonConvergence { .. } | Error::IntegralityViolation(_)) => 1,
            Failure::Core(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(s) => f.write_str(s),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Integers as JSON numbers when they fit, decimal strings otherwise.
pub fn int(x: &impl ToString) -> Value {
    let s = x.to_string();
    s.parse::<i64>().map_or(Value::String(s), Value::from)
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `key,value` lines for the scalar fields of a flat object.
pub fn key_value_csv(pairs: &[(&str, String)]) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in pairs {
        out.push_str(&format!("{k},{}\n", csv_field(v)));
    }
    out
}
