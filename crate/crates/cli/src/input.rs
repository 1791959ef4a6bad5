//! Dataset ingestion.
//!
//! Plain text: real numbers separated by whitespace and/or commas; blank
//! lines are ignored. A structured report from `extremal --json` is also
//! accepted, in which case its `results.values` array is the dataset.

use std::io::Read;
use std::path::Path;

use hsbound_core::Sample;

use crate::error::CliError;

pub fn read_source(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    Ok(text)
}

pub fn parse_values(text: &str) -> Result<Vec<f64>, CliError> {
    if text.trim_start().starts_with('{') {
        return parse_report_values(text);
    }
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Parse(format!("not a finite number: {tok:?}")))
        })
        .collect()
}

fn parse_report_values(text: &str) -> Result<Vec<f64>, CliError> {
    let doc: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("invalid report: {e}")))?;
    let values = doc
        .pointer("/results/values")
        .and_then(|v| v.as_array())
        .ok_or_else(|| CliError::Parse("report has no results.values array".into()))?;
    values
        .iter()
        .map(|v| {
            v.as_f64()
                .ok_or_else(|| CliError::Parse(format!("not a number: {v}")))
        })
        .collect()
}

/// Parses text into a sample of at least two values.
pub fn parse_sample(text: &str) -> Result<Sample, CliError> {
    let values = parse_values(text)?;
    Sample::new(values).map_err(|e| CliError::Parse(e.to_string()))
}
