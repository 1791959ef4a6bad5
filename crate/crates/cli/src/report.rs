use serde::Serialize;
use serde_json::{Map, Value};

/// Significant digits for numbers in structured output.
pub const STRUCTURED_DIGITS: usize = 15;
/// Significant digits for numbers in human-readable output.
pub const HUMAN_DIGITS: usize = 6;

/// One report per invocation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub command: String,
    pub version: String,
    pub inputs: Value,
    pub results: Value,
}

impl ReportDocument {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Self {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs,
            results,
        }
    }

    pub fn error(command: &str, inputs: Value, message: &str) -> Self {
        Self::new(command, inputs, serde_json::json!({ "error": message }))
    }

    /// Pretty JSON with every number rounded to 15 significant digits.
    /// Keys are sorted, so identical reports serialize identically.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report is serializable");
        let mut out = serde_json::to_string_pretty(&round_numbers(value, STRUCTURED_DIGITS))
            .expect("report is serializable");
        out.push('\n');
        out
    }

    /// `key.path: value` lines with 6 significant digits.
    pub fn to_human(&self) -> String {
        let mut lines = vec![
            format!("command: {}", self.command),
            format!("version: {}", self.version),
        ];
        flatten("inputs", &self.inputs, &mut lines);
        flatten("results", &self.results, &mut lines);
        lines.push(String::new());
        lines.join("\n")
    }
}

/// Rounds `x` to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

fn round_numbers(value: Value, digits: usize) -> Value {
    match value {
        Value::Number(num) if num.is_f64() => {
            let x = num.as_f64().expect("f64 number");
            serde_json::Number::from_f64(round_sig(x, digits)).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(
            items
                .into_iter()
                .map(|v| round_numbers(v, digits))
                .collect(),
        ),
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| (k, round_numbers(v, digits)))
                .collect::<Map<_, _>>(),
        ),
        other => other,
    }
}

fn human_scalar(value: &Value) -> String {
    match value {
        Value::Number(num) if num.is_f64() => {
            let x = round_sig(num.as_f64().unwrap_or(f64::NAN), HUMAN_DIGITS);
            if x != 0.0 && !(1e-4..1e15).contains(&x.abs()) {
                format!("{x:e}")
            } else {
                x.to_string()
            }
        }
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(human_scalar)
            .collect::<Vec<_>>()
            .join(", "),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, value: &Value, lines: &mut Vec<String>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{prefix}.{k}"), v, lines);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, lines);
            }
        }
        scalar => lines.push(format!("{prefix}: {}", human_scalar(scalar))),
    }
}
