//! Command results, rendered either as JSON or as indented text.

use std::fmt::Write as _;

use lie4_core::linalg::Mat4;
use lie4_core::{Rational, Surd};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    /// Keys are kept sorted, so equal reports serialize to equal bytes.
    pub data: Map<String, Value>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ok: true, data: Map::new() }
    }

    pub fn insert(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.data.insert(key.into(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn from_json(src: &str) -> serde_json::Result<Self> {
        serde_json::from_str(src)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, if self.ok { "PASS" } else { "FAIL" });
        for (k, v) in &self.data {
            render(&mut out, k, v, 1);
        }
        out
    }
}

fn is_matrix(v: &[Value]) -> bool {
    !v.is_empty() && v.iter().all(|row| row.as_array().is_some_and(|r| r.iter().all(|x| !x.is_array() && !x.is_object())))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, x) in map {
                render(out, k, x, depth + 1);
            }
        }
        Value::Array(items) if is_matrix(items) => {
            let _ = writeln!(out, "{pad}{key}:");
            for row in items {
                let cells: Vec<String> = row.as_array().into_iter().flatten().map(scalar_text).collect();
                let _ = writeln!(out, "{pad}  [{}]", cells.join(", "));
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (n, x) in items.iter().enumerate() {
                render(out, &format!("[{n}]"), x, depth + 1);
            }
        }
        Value::Array(items) => {
            let cells: Vec<String> = items.iter().map(scalar_text).collect();
            let _ = writeln!(out, "{pad}{key}: [{}]", cells.join(", "));
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {}", scalar_text(other));
        }
    }
}

/// Scalars as report values: exact rationals become `"p/q"` strings,
/// floats become JSON numbers.
pub trait Emit {
    fn emit(&self) -> Value;
}

impl Emit for Rational {
    fn emit(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Emit for f64 {
    fn emit(&self) -> Value {
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }
}

impl Emit for Surd {
    fn emit(&self) -> Value {
        let re = self.re().to_string();
        match self.radicand() {
            None => Value::String(re),
            Some(d) if self.re() == &Rational::from_integer(0.into()) => Value::String(format!("{}*sqrt({d})", self.im())),
            Some(d) => Value::String(format!("{re} + {}*sqrt({d})", self.im())),
        }
    }
}

impl Emit for bool {
    fn emit(&self) -> Value {
        Value::Bool(*self)
    }
}

impl<T: Emit> Emit for [T] {
    fn emit(&self) -> Value {
        Value::Array(self.iter().map(Emit::emit).collect())
    }
}

impl<T: Emit, const N: usize> Emit for [T; N] {
    fn emit(&self) -> Value {
        self.as_slice().emit()
    }
}

pub fn matrix<T: Emit>(m: &Mat4<T>) -> Value {
    m.emit()
}
