//! Report types and their text and JSON renderings.
//!
//! JSON output goes through `serde_json::Value`, whose maps are ordered, so
//! keys come out sorted and the bytes are deterministic.

use gradord_core::group::{ChiInvariants, OrbitConductor};
use gradord_core::iwasawa::ConductorRow;
use gradord_core::order::QuotientBlock;
use gradord_core::Backend;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::args::Format;

/// A rendered command result.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub value: Value,
}

impl Output {
    pub fn new<T: Serialize>(report: &T) -> Self {
        Output {
            value: serde_json::to_value(report).expect("reports serialise"),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.value).expect("values serialise");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                render_text(&self.value, 0, &mut out);
                out
            }
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| matches!(x, Value::Number(_) | Value::String(_))) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn grid(rows: &[Vec<String>], indent: usize, out: &mut String) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(&" ".repeat(indent));
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            let flat_objects = !items.is_empty()
                && items.iter().all(|x| matches!(x, Value::Object(m) if m.values().all(|y| scalar(y).is_some())));
            let string_rows = items
                .iter()
                .all(|x| matches!(x, Value::Array(r) if r.iter().all(|y| matches!(y, Value::String(_)))));
            if flat_objects {
                let keys: Vec<String> = match &items[0] {
                    Value::Object(m) => m.keys().cloned().collect(),
                    _ => unreachable!(),
                };
                let mut rows = vec![keys.clone()];
                for x in items {
                    rows.push(keys.iter().map(|k| x.get(k).and_then(scalar).unwrap_or_default()).collect());
                }
                grid(&rows, indent, out);
            } else if string_rows && !items.is_empty() {
                let rows: Vec<Vec<String>> = items
                    .iter()
                    .map(|r| r.as_array().expect("checked").iter().filter_map(scalar).collect())
                    .collect();
                grid(&rows, indent, out);
            } else {
                for (i, x) in items.iter().enumerate() {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}[{i}]\n"));
                            render_text(x, indent + 2, out);
                        }
                    }
                }
            }
        }
        other => {
            out.push_str(&pad);
            out.push_str(&scalar(other).unwrap_or_default());
            out.push('\n');
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub backend: Backend,
    pub blocks: Vec<usize>,
    pub block_count: usize,
    pub total_size: usize,
}

/// An ideal matrix over the order's block frame.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixReport {
    pub backend: Backend,
    pub blocks: Vec<usize>,
    pub ideals: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub block_count: usize,
    pub blocks: Vec<QuotientBlock>,
    /// Length of the order modulo its radical, when finite.
    pub colength: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub extremal: bool,
    /// Number of extremal orders on the frame radically covering the input
    /// (dvr backend only).
    pub covers: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HereditaryReport {
    pub extremal: bool,
    pub radical_invertible: bool,
    pub obstructed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalizeReport {
    pub element: String,
    pub order: gradord_core::formats::OrderFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub indices: Vec<usize>,
    pub characters: Vec<String>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsReport {
    pub group: String,
    pub prime: u64,
    pub orbits: Vec<OrbitEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentEntry {
    pub indices: Vec<usize>,
    /// Coefficient of each group element, as `level:c0,c1,...`.
    pub coefficients: Vec<String>,
    pub idempotent: bool,
    pub central: bool,
    pub galois_stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentsReport {
    pub group: String,
    pub prime: u64,
    pub orbits: Vec<IdempotentEntry>,
    pub sum_is_one: bool,
    pub orthogonal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRow {
    pub eta: usize,
    pub character: String,
    #[serde(flatten)]
    pub invariants: ChiInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub group: String,
    pub prime: u64,
    pub automorphism: Vec<usize>,
    pub rows: Vec<InvariantRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConductorOracleReport {
    pub group: String,
    pub prime: u64,
    pub precision: u32,
    pub orbits: Vec<OrbitConductor>,
    pub all_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RChiRow {
    pub name: String,
    pub r_chi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SChiRow {
    pub name: String,
    pub s_eta: u32,
    pub w_chi: u32,
    pub v_chi: u32,
    pub s_chi: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowsReport<T> {
    pub rows: Vec<T>,
}

pub type ConductorReport = RowsReport<ConductorRow>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_are_sorted() {
        let r = ExtremalReport {
            extremal: true,
            covers: Some(1),
        };
        let s = Output::new(&r).render(Format::Json);
        assert!(s.find("covers").unwrap() < s.find("extremal").unwrap());
        let back: ExtremalReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn text_tables() {
        let r = RowsReport {
            rows: vec![
                RChiRow {
                    name: "a".into(),
                    r_chi: 0,
                },
                RChiRow {
                    name: "bb".into(),
                    r_chi: -1,
                },
            ],
        };
        let s = Output::new(&r).render(Format::Text);
        assert_eq!(s, "rows:\n  name  r_chi\n  a     0\n  bb    -1\n");
    }
}
