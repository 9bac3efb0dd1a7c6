//! Deterministic key-value report tree for CLI output.
//!
//! Machine output is a flat, ordered list of `path = value` lines; exact
//! integers are serialized as decimal strings so no consumer can
//! overflow. Two runs on identical input produce byte-identical output.

use std::fmt::Write as _;

use crate::invariants::{HomologyClass, IntersectionForm, InvariantReport};
use crate::{conventions, Int, IntMatrix};

/// One value at a report path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Text(String),
    Integer(Int),
    IntegerList(Vec<Int>),
    Matrix(IntMatrix),
    Flag(bool),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Integer(n) => n.to_string(),
            Value::IntegerList(v) => {
                let items: Vec<String> = v.iter().map(Int::to_string).collect();
                format!("[{}]", items.join(", "))
            }
            Value::Matrix(m) => m.to_string(),
            Value::Flag(b) => b.to_string(),
        }
    }
}

/// Ordered list of `(path, value)` entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Envelope shared by every command: the command echo plus the
    /// convention fingerprint.
    pub fn envelope(command: &str) -> Self {
        let mut r = Report::new();
        r.push_text("command", command);
        r.push_text("convention.sign", conventions::SIGN);
        r.push_text("convention.order", conventions::ORDER);
        r.push_text("convention.linking", conventions::LINKING);
        r
    }

    pub fn push(&mut self, path: impl Into<String>, value: Value) {
        self.entries.push((path.into(), value));
    }

    pub fn push_text(&mut self, path: impl Into<String>, text: impl Into<String>) {
        self.push(path, Value::Text(text.into()));
    }

    pub fn push_int(&mut self, path: impl Into<String>, n: impl Into<Int>) {
        self.push(path, Value::Integer(n.into()));
    }

    pub fn push_list(&mut self, path: impl Into<String>, v: Vec<Int>) {
        self.push(path, Value::IntegerList(v));
    }

    pub fn push_flag(&mut self, path: impl Into<String>, b: bool) {
        self.push(path, Value::Flag(b));
    }

    /// Appends the fields of an invariant report under `prefix`.
    pub fn push_invariants(&mut self, prefix: &str, report: &InvariantReport) {
        self.push_int(format!("{prefix}.euler"), report.euler);
        match &report.h1 {
            HomologyClass::Known(factors) => {
                self.push_list(format!("{prefix}.h1"), factors.clone());
                self.push_text(format!("{prefix}.h1.group"), report.h1.to_string());
            }
            HomologyClass::Indeterminate => {
                self.push_text(format!("{prefix}.h1"), "indeterminate");
            }
        }
        self.push_int(format!("{prefix}.signature"), report.signature);
        if let Some(form) = &report.form {
            self.push_form(prefix, form);
        }
        if report.framing_blind {
            self.push_flag(format!("{prefix}.framing_blind"), true);
        }
    }

    pub fn push_form(&mut self, prefix: &str, form: &IntersectionForm) {
        self.push_int(format!("{prefix}.b2"), form.b2 as i64);
        self.push(format!("{prefix}.gram"), Value::Matrix(form.gram.clone()));
        self.push_list(
            format!("{prefix}.inertia"),
            vec![
                Int::from(form.inertia.positive as i64),
                Int::from(form.inertia.zero as i64),
                Int::from(form.inertia.negative as i64),
            ],
        );
        self.push_flag(format!("{prefix}.even"), form.even);
        self.push_text(
            format!("{prefix}.definiteness"),
            form.definiteness.to_string(),
        );
        self.push_int(format!("{prefix}.determinant"), form.determinant.clone());
    }

    pub fn get(&self, path: &str) -> Option<&Value> {
        self.entries.iter().find(|(p, _)| p == path).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    /// Flat `path = value` lines, one per entry, in insertion order.
    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        for (path, value) in &self.entries {
            let _ = writeln!(out, "{path} = {}", value.render());
        }
        out
    }

    /// Human-oriented rendering; same content, aligned.
    pub fn to_text(&self) -> String {
        let width = self.entries.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (path, value) in &self.entries {
            let _ = writeln!(out, "{path:<width$}  {}", value.render());
        }
        out
    }
}
