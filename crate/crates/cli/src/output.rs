//! Rendering helpers shared by every subcommand.

use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::Value;

/// How results are written to stdout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Human-readable lines.
    Table,
    /// Comma-separated values with a header row; `#` lines are comments.
    Csv,
    /// A single JSON object.
    Json,
}

/// Formats a float with twelve significant digits.
///
/// All quantities this tool prints lie in `[-1, 1]`, so plain decimal
/// notation always suffices; exact zero renders as `0.000000000000`.
pub fn format_float(v: f64) -> String {
    if !v.is_finite() {
        return "nan".to_owned();
    }
    if v == 0.0 {
        return "0.000000000000".to_owned();
    }
    // {:e} exposes the decimal exponent exactly; log10 can be off by one ulp.
    let sci = format!("{:e}", v.abs());
    let exponent: i32 = sci[sci.find('e').expect("scientific notation") + 1..]
        .parse()
        .expect("exponent digits");
    let decimals = (11 - exponent).max(0) as usize;
    format!("{:.*}", decimals, v)
}

/// Formats an optional float, using `nan` when no value is available.
pub fn format_float_opt(v: Option<f64>) -> String {
    match v {
        Some(v) => format_float(v),
        None => "nan".to_owned(),
    }
}

/// A JSON number carrying exactly the twelve-significant-digit token.
pub fn json_float(v: f64) -> Value {
    if !v.is_finite() {
        return Value::Null;
    }
    Value::Number(format_float(v).parse().expect("numeric token"))
}

/// A JSON number for an optional float; `null` when absent.
pub fn json_float_opt(v: Option<f64>) -> Value {
    match v {
        Some(v) => json_float(v),
        None => Value::Null,
    }
}

/// Counts may exceed what a JSON number holds, so they render as strings.
pub fn json_biguint(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

/// Serializes a JSON object followed by a newline.
pub fn json_document(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable value");
    text.push('\n');
    text
}

/// Escapes a free-text CSV field by dropping the delimiter character, so
/// emitted files never need quoting and round-trip byte-identically.
pub fn csv_text(field: &str) -> String {
    field.replace(',', ";").replace('\n', " ")
}
