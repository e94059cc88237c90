use std::fmt::{Display, Write as _};

use lpi_core::exactalg::Mat2;
use serde_json::Value;

/// Verdicts for identity tests. There is deliberately no positive verdict.
pub const NOT_AN_LPI: &str = "NOT an LPI (certificate attached)";
pub const INCONCLUSIVE: &str = "no obstruction found (inconclusive)";
pub const INVALID: &str = "input invalid";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Verified, or nothing to report against the input.
    Ok,
    /// A property failed or a counterexample was found.
    Violated,
}

/// What a subcommand produced: a JSON record plus its human rendering.
pub struct Output {
    pub status: Status,
    pub json: Value,
    pub text: String,
}

impl Output {
    pub fn new(status: Status, json: Value) -> Self {
        Output {
            status,
            json,
            text: String::new(),
        }
    }

    pub fn line(&mut self, line: impl Display) -> &mut Self {
        let _ = writeln!(self.text, "{line}");
        self
    }

    pub fn kv(&mut self, key: &str, value: impl Display) -> &mut Self {
        let _ = writeln!(self.text, "{key}: {value}");
        self
    }
}

pub fn mat_json<R: Display>(m: &Mat2<R>) -> Value {
    let s = |i: usize| Value::String(m.e[i].to_string());
    Value::Array(vec![
        Value::Array(vec![s(0), s(1)]),
        Value::Array(vec![s(2), s(3)]),
    ])
}

pub fn strings<T: Display>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|x| Value::String(x.to_string())).collect())
}

/// `[a, b, c]` for display.
pub fn bracketed<T: Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}
