//! Text, JSON and CSV rendering of report values.

use serde_json::Value;

use crate::{CliError, Command, Format};

pub fn render(command: &Command, report: &Value, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json(report)),
        Format::Csv => csv(report),
        Format::Text => Ok(match command {
            Command::Sequence(_) => sequence_line(report)?,
            _ => text(report),
        }),
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn json(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report values serialize");
    s.push('\n');
    s
}

fn terms(report: &Value) -> Result<&Vec<Value>, CliError> {
    report
        .get("sequence")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Usage("report has no sequence".into()))
}

fn sequence_line(report: &Value) -> Result<String, CliError> {
    let items: Vec<String> = terms(report)?.iter().map(scalar).collect();
    Ok(format!("{}\n", items.join(" ")))
}

fn csv(report: &Value) -> Result<String, CliError> {
    let mut out = String::from("n,degree\n");
    for (i, t) in terms(report)?.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, scalar(t)));
    }
    Ok(out)
}

/// A leaf value as it appears in text output.
pub fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(xs: &[Value]) -> String {
    let items: Vec<String> = xs.iter().map(scalar).collect();
    format!("[{}]", items.join(", "))
}

/// Indented `key: value` listing of a report.
pub fn text(report: &Value) -> String {
    let mut out = String::new();
    write_value(report, 0, &mut out);
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                write_entry(&format!("{pad}{k}"), x, indent, out);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                write_entry(&format!("{pad}[{i}]"), x, indent, out);
            }
        }
        leaf => {
            out.push_str(&pad);
            out.push_str(&scalar(leaf));
            out.push('\n');
        }
    }
}

fn write_entry(label: &str, x: &Value, indent: usize, out: &mut String) {
    match x {
        Value::Array(xs) if xs.iter().all(is_scalar) => {
            out.push_str(&format!("{label}: {}\n", inline(xs)));
        }
        Value::Array(xs)
            if xs
                .iter()
                .all(|r| r.as_array().is_some_and(|r| r.iter().all(is_scalar))) =>
        {
            out.push_str(&format!("{label}:\n"));
            let pad = " ".repeat(indent + 2);
            for r in xs {
                out.push_str(&format!(
                    "{pad}{}\n",
                    inline(r.as_array().expect("checked"))
                ));
            }
        }
        Value::Array(_) | Value::Object(_) => {
            out.push_str(&format!("{label}:\n"));
            write_value(x, indent + 2, out);
        }
        leaf => out.push_str(&format!("{label}: {}\n", scalar(leaf))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_layout() {
        let v = json!({
            "input": [[1, 0], [0, 1]],
            "name": "x",
            "nested": { "list": [1, 2], "none": null },
            "rows": [{ "a": 1 }],
        });
        assert_eq!(
            text(&v),
            "input:\n  [1, 0]\n  [0, 1]\nname: x\nnested:\n  list: [1, 2]\n  none: -\nrows:\n  [0]:\n    a: 1\n"
        );
    }

    #[test]
    fn csv_layout() {
        let v = json!({ "sequence": [2, 3, 4] });
        assert_eq!(csv(&v).unwrap(), "n,degree\n1,2\n2,3\n3,4\n");
        assert!(csv(&json!({})).is_err());
    }

    #[test]
    fn json_is_canonical() {
        let v: Value =
            serde_json::from_str(r#"{"b": 1, "a": 123456789012345678901234567890}"#).unwrap();
        let out = json(&v);
        assert!(out.find("\"a\"").unwrap() < out.find("\"b\"").unwrap());
        assert!(out.contains("123456789012345678901234567890"));
        let again: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(json(&again), out);
    }
}
