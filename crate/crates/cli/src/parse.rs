use std::path::Path;

use monodeg::IntMatrix;
use num_bigint::BigInt;
use serde_json::Value;

use crate::CliError;

fn entry(v: &Value) -> Result<BigInt, CliError> {
    let bad = || CliError::Parse(format!("matrix entries must be integers, got {v}"));
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

fn from_value(v: &Value) -> Result<IntMatrix, CliError> {
    let rows = v
        .as_array()
        .ok_or_else(|| CliError::Parse("matrix must be a list of rows".into()))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| CliError::Parse("each row must be a list".into()))?
                .iter()
                .map(entry)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntMatrix::from_rows(rows)?)
}

/// Parses a bracket literal such as `[[-1,1,0],[-1,0,1],[1,0,0]]`, or reads
/// a JSON file `{"matrix": [[...], ...]}` when the text is not a literal.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, CliError> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| CliError::Parse(e.to_string()))?;
        from_value(&v)
    } else {
        read_matrix_file(Path::new(trimmed))
    }
}

pub fn read_matrix_file(path: &Path) -> Result<IntMatrix, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    let m = v
        .get("matrix")
        .ok_or_else(|| CliError::Parse("JSON input needs a \"matrix\" field".into()))?;
    from_value(m)
}
