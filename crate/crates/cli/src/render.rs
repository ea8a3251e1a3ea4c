//! Plain-text rendering of JSON reports.

use serde_json::{Map, Value};
use std::fmt::Write;

const INDENT: &str = "  ";

pub fn text(value: &Value) -> String {
    let mut out = String::new();
    block(&mut out, value, 0);
    out
}

fn block(out: &mut String, value: &Value, depth: usize) {
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                field(out, key, v, depth);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                block(out, v, depth);
            }
        }
        other => {
            let _ = writeln!(out, "{}{}", INDENT.repeat(depth), inline(other).unwrap_or_default());
        }
    }
}

fn field(out: &mut String, key: &str, value: &Value, depth: usize) {
    let pad = INDENT.repeat(depth);
    if value.is_null() {
        return;
    }
    if key == "matrix" {
        if let Some(rows) = matrix_rows(value) {
            let _ = writeln!(out, "{pad}{key}: {rows}");
            return;
        }
    }
    if let Some(line) = inline(value) {
        let _ = writeln!(out, "{pad}{key}: {line}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match value {
        Value::Array(items) => {
            for item in items {
                let mut inner = String::new();
                block(&mut inner, item, 0);
                let mut lines = inner.lines();
                if let Some(first) = lines.next() {
                    let _ = writeln!(out, "{pad}{INDENT}- {first}");
                }
                for line in lines {
                    let _ = writeln!(out, "{pad}{INDENT}  {line}");
                }
            }
        }
        _ => block(out, value, depth + 1),
    }
}

/// One-line form: scalars, lists of scalars, and objects that carry a
/// `text` rendering (rational functions, surds, expansions).
fn inline(value: &Value) -> Option<String> {
    match value {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar_or_pair).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(map) => labelled(map),
    }
}

/// Integers and `[num, den]` fractions.
fn scalar_or_pair(value: &Value) -> Option<String> {
    match value {
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(_) | Value::String(_) => inline(value),
        Value::Array(pair) if pair.len() == 2 && pair.iter().all(Value::is_number) => Some(format!("{}/{}", pair[0], pair[1])),
        _ => None,
    }
}

fn matrix_rows(value: &Value) -> Option<String> {
    let rows = value.as_array()?;
    let rendered: Option<Vec<String>> = rows
        .iter()
        .map(|row| {
            let row = row.as_array()?;
            row.iter().all(Value::is_number).then(|| format!("[{}]", row.iter().map(Value::to_string).collect::<Vec<_>>().join(", ")))
        })
        .collect();
    rendered.map(|r| format!("[{}]", r.join(", ")))
}

fn labelled(map: &Map<String, Value>) -> Option<String> {
    let text = map.get("text")?.as_str()?;
    Some(match map.get("decimal").and_then(Value::as_str) {
        Some(d) => format!("{text} = {d}"),
        None => text.to_string(),
    })
}
