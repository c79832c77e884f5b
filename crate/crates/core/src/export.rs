//! Rendering helpers shared by the CLI: aligned tables, CSV, JSON lines,
//! OEIS b-files, and histogram exports.

use num::BigUint;
use serde::Serializer;
use std::collections::BTreeMap;

/// Serializes a big integer as its decimal string, keeping JSON output
/// exact for values beyond double precision.
pub fn biguint_as_string<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Left-aligned plain-text table; column widths fit the content.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let push_row = |cells: &[String], out: &mut String| {
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < cols {
                for _ in cell.len()..widths[i] {
                    out.push(' ');
                }
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    let headers: Vec<String> = headers.iter().map(|s| s.to_string()).collect();
    push_row(&headers, &mut out);
    for row in rows {
        push_row(row, &mut out);
    }
    out
}

/// One CSV line; fields are plain (no quoting needed for this data).
pub fn csv_line(cells: &[String]) -> String {
    cells.join(",")
}

/// OEIS b-file line: `n value`.
pub fn bfile_line(n: usize, value: &BigUint) -> String {
    format!("{n} {value}")
}

/// Histogram as a polynomial in `q`, e.g. `1 + 3q + 2q^2`.
pub fn histogram_poly(hist: &BTreeMap<u64, u64>) -> String {
    if hist.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (&value, &count) in hist {
        if count == 0 {
            continue;
        }
        let coeff = if count == 1 && value > 0 {
            String::new()
        } else {
            count.to_string()
        };
        let term = match value {
            0 => {
                if coeff.is_empty() {
                    "1".to_string()
                } else {
                    coeff
                }
            }
            1 => format!("{coeff}q"),
            v => format!("{coeff}q^{v}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Histogram as a JSON object keyed by statistic value.
pub fn histogram_json(hist: &BTreeMap<u64, u64>) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = hist
        .iter()
        .map(|(k, v)| (k.to_string(), serde_json::Value::from(*v)))
        .collect();
    serde_json::Value::Object(map)
}
