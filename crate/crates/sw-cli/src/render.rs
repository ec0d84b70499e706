//! Deterministic report rendering: JSON with insertion-ordered keys and
//! fixed numeric formatting, or a compact Markdown view of the same data.

use crate::Format;
use num::complex::Complex64;
use serde_json::{json, Map, Value};
use sw_core::exactalg::Rational;

pub fn rational_value(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn complex_value(z: Complex64) -> Value {
    json!({ "re": fmt17(z.re), "im": fmt17(z.im) })
}

/// 17 significant digits round-trips every f64 exactly.
pub fn fmt17(x: f64) -> Value {
    if x == 0.0 {
        return json!(0.0);
    }
    let s = format!("{x:.16e}");
    Value::Number(
        serde_json::Number::from_f64(s.parse::<f64>().unwrap_or(x))
            .unwrap_or_else(|| serde_json::Number::from_f64(0.0).unwrap()),
    )
}

pub fn report(command: Value, results: Value, status: &str) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!("1"));
    m.insert("command".into(), command);
    m.insert("results".into(), results);
    m.insert("status".into(), json!(status));
    Value::Object(m)
}

pub fn emit(report: &Value, format: Format) {
    use std::io::Write;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(report).unwrap(),
        Format::Md => {
            let mut out = String::from("# report\n");
            render_md(report, 0, &mut out);
            out.pop();
            out
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{text}");
}

fn render_md(v: &Value, depth: usize, out: &mut String) {
    use std::fmt::Write;
    let indent = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{indent}- **{k}**:");
                        render_md(val, depth + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{indent}- **{k}**: {val}");
                    }
                }
            }
        }
        Value::Array(items) => {
            // arrays of arrays of scalars render as a table
            let is_matrix = !items.is_empty()
                && items.iter().all(|r| {
                    matches!(r, Value::Array(cells) if cells.iter().all(|c| !matches!(c, Value::Array(_) | Value::Object(_))))
                });
            if is_matrix {
                for row in items {
                    if let Value::Array(cells) = row {
                        let line: Vec<String> = cells.iter().map(|c| c.to_string()).collect();
                        let _ = writeln!(out, "{indent}| {} |", line.join(" | "));
                    }
                }
            } else {
                for item in items {
                    match item {
                        Value::Object(_) | Value::Array(_) => render_md(item, depth + 1, out),
                        _ => {
                            let _ = writeln!(out, "{indent}- {item}");
                        }
                    }
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{indent}{v}");
        }
    }
}
