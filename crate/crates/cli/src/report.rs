//! Report assembly and rendering.
//!
//! Every subcommand produces a `Report`: a command echo, an optional input
//! echo, and an ordered list of named output values. A report renders
//! either as human-readable `key: value` lines or as a JSON object; both
//! renderings are deterministic functions of the report, so identical
//! inputs produce byte-identical output. All numbers are exact rational or
//! integer strings — nothing is ever rounded.

use serde_json::{json, Map, Value as Json};
use waring::{print_form, Form, Integer, Matrix, Rational};

/// One output value in a report.
pub enum Value {
    Rational(Rational),
    Integer(Integer),
    Bool(bool),
    Count(usize),
    Matrix(Matrix<Rational>),
    Form(Form),
}

impl Value {
    fn to_json(&self) -> Json {
        match self {
            Value::Rational(r) => Json::String(r.to_string()),
            Value::Integer(i) => Json::String(i.to_string()),
            Value::Bool(b) => Json::Bool(*b),
            Value::Count(c) => json!(c),
            Value::Matrix(m) => matrix_json(m),
            Value::Form(f) => form_json(f),
        }
    }
}

fn matrix_json(m: &Matrix<Rational>) -> Json {
    let rows: Vec<Json> = (0..m.nrows())
        .map(|i| {
            Json::Array(
                (0..m.ncols())
                    .map(|j| Json::String(m.get(i, j).to_string()))
                    .collect(),
            )
        })
        .collect();
    Json::Array(rows)
}

fn form_json(f: &Form) -> Json {
    let text = f.to_json().expect("form arity fits the JSON format");
    let parsed: Json = serde_json::from_str(&text).expect("canonical form JSON is valid");
    json!({ "text": print_form(f), "json": parsed })
}

/// A rendered computation: command echo, input echo, named outputs.
pub struct Report {
    command: &'static str,
    input: Option<Form>,
    fields: Vec<(&'static str, Value)>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            input: None,
            fields: Vec::new(),
        }
    }

    pub fn with_input(mut self, f: &Form) -> Self {
        self.input = Some(f.clone());
        self
    }

    pub fn push(&mut self, key: &'static str, value: Value) {
        self.fields.push((key, value));
    }

    /// Human rendering: one `key: value` line per field; matrices and
    /// forms expand over multiple lines.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if let Some(f) = &self.input {
            out.push_str(&format!("input: {}\n", print_form(f)));
        }
        for (key, value) in &self.fields {
            match value {
                Value::Rational(r) => out.push_str(&format!("{key}: {r}\n")),
                Value::Integer(i) => out.push_str(&format!("{key}: {i}\n")),
                Value::Bool(b) => out.push_str(&format!("{key}: {b}\n")),
                Value::Count(c) => out.push_str(&format!("{key}: {c}\n")),
                Value::Matrix(m) => {
                    out.push_str(&format!("{key}:\n"));
                    for line in m.to_string().lines() {
                        out.push_str(&format!("  {line}\n"));
                    }
                }
                Value::Form(f) => {
                    out.push_str(&format!("{key}: {}\n", print_form(f)));
                    out.push_str(&format!(
                        "{key}_json: {}\n",
                        f.to_json().expect("form arity fits the JSON format")
                    ));
                }
            }
        }
        out
    }

    /// JSON rendering: `{"command", "input"?, "outputs": {...}}` with keys
    /// in sorted order (the serializer's map is ordered), printed compactly
    /// on one line.
    pub fn render_json(&self) -> String {
        let mut top = Map::new();
        top.insert("command".into(), Json::String(self.command.into()));
        if let Some(f) = &self.input {
            top.insert("input".into(), form_json(f));
        }
        let mut outputs = Map::new();
        for (key, value) in &self.fields {
            outputs.insert((*key).into(), value.to_json());
        }
        top.insert("outputs".into(), Json::Object(outputs));
        serde_json::to_string(&Json::Object(top)).expect("report JSON serializes")
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = self.render_json();
            s.push('\n');
            s
        } else {
            self.render_human()
        }
    }
}
