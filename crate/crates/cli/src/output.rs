//! Deterministic result rendering.
//!
//! Everything goes through `serde_json::Value` first: the map type keeps
//! keys sorted and numbers print in shortest round-trip decimal, so a given
//! config always produces byte-identical output. The CSV path flattens the
//! same `Value` tree into dotted column names, which guarantees the two
//! formats carry identical numeric text.

use serde::Serialize;
use serde_json::Value;

use crate::CliError;

/// Render a result document as pretty JSON (trailing newline included).
pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let tree = serde_json::to_value(value)
        .map_err(|e| CliError::Config(format!("failed to serialize result: {e}")))?;
    let mut text = serde_json::to_string_pretty(&tree)
        .map_err(|e| CliError::Config(format!("failed to render result: {e}")))?;
    text.push('\n');
    Ok(text)
}

/// Render one result document as a two-line CSV (header + row).
pub fn to_csv_single<T: Serialize>(value: &T) -> Result<String, CliError> {
    let tree = serde_json::to_value(value)
        .map_err(|e| CliError::Config(format!("failed to serialize result: {e}")))?;
    Ok(render_csv(&[tree]))
}

/// Render a slice of row documents (one per sweep point) as CSV.
pub fn to_csv_rows(rows: &[Value]) -> String {
    render_csv(rows)
}

fn render_csv(rows: &[Value]) -> String {
    // Column set: union of flattened keys over all rows, sorted (flatten
    // emits sorted keys per row already, and a BTreeSet keeps the union
    // deterministic when rows differ in optional fields).
    let flattened: Vec<Vec<(String, String)>> = rows.iter().map(flatten).collect();
    let mut columns: std::collections::BTreeSet<&str> = std::collections::BTreeSet::new();
    for row in &flattened {
        for (key, _) in row {
            columns.insert(key);
        }
    }
    let columns: Vec<&str> = columns.into_iter().collect();

    let mut out = String::new();
    out.push_str(
        &columns
            .iter()
            .map(|c| escape_csv(c))
            .collect::<Vec<_>>()
            .join(","),
    );
    out.push('\n');
    for row in &flattened {
        let mut cells = Vec::with_capacity(columns.len());
        for col in &columns {
            let cell = row
                .iter()
                .find(|(key, _)| key == col)
                .map(|(_, v)| v.as_str())
                .unwrap_or("");
            cells.push(escape_csv(cell));
        }
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Flatten a JSON tree into `(dotted key, cell text)` pairs. Numbers keep
/// the exact textual form serde_json would print, so CSV and JSON never
/// disagree on a value.
fn flatten(value: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    walk(value, String::new(), &mut out);
    out
}

fn walk(value: &Value, prefix: String, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (key, child) in map {
                let next = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                walk(child, next, out);
            }
        }
        Value::Array(items) => {
            for (index, child) in items.iter().enumerate() {
                walk(child, format!("{prefix}.{index}"), out);
            }
        }
        Value::Null => out.push((prefix, String::new())),
        Value::Bool(b) => out.push((prefix, b.to_string())),
        Value::Number(n) => out.push((prefix, n.to_string())),
        Value::String(s) => out.push((prefix, s.clone())),
    }
}

/// RFC-4180 escaping: quote a cell when it holds a comma, quote or newline.
fn escape_csv(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Machine-readable error object written to stdout on failure.
pub fn error_document(kind: &str, message: &str) -> String {
    let doc = serde_json::json!({
        "error": {
            "kind": kind,
            "message": message,
        }
    });
    let mut text =
        serde_json::to_string_pretty(&doc).expect("error document is always serializable");
    text.push('\n');
    text
}
