use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Everything a command prints. Keys come out sorted because `serde_json`
/// objects are ordered maps.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CommandReport {
    /// The arguments after the program name, space-joined.
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<VerdictRecord>>,
    pub wall_time_ms: u64,
    pub workers: usize,
    /// Command-specific fields, merged into the top level.
    #[serde(flatten)]
    pub result: BTreeMap<String, Value>,
    /// Preferred TSV layout: header, then rows.
    #[serde(skip)]
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct VerdictRecord {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CommandReport {
    pub fn new(command: String) -> Self {
        CommandReport {
            command,
            method: None,
            verdicts: None,
            wall_time_ms: 0,
            workers: 0,
            result: BTreeMap::new(),
            table: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.to_string(), value.into());
    }

    /// `false` when some verdict failed or an `agree` field is false.
    pub fn succeeded(&self) -> bool {
        let verdicts_ok = self.verdicts.iter().flatten().all(|v| v.passed);
        verdicts_ok && self.result.get("agree") != Some(&Value::Bool(false))
    }
}

/// An exact integer: a JSON number when it fits in 64 bits, otherwise a string.
pub fn int(x: &BigInt) -> Value {
    if let Some(v) = x.to_i64() {
        Value::from(v)
    } else if let Some(v) = x.to_u64() {
        Value::from(v)
    } else {
        Value::String(x.to_string())
    }
}

pub fn int_map<K: ToString>(m: &BTreeMap<K, BigInt>) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.to_string(), int(v))).collect::<Map<_, _>>())
}

pub fn strings<S: ToString>(xs: impl IntoIterator<Item = S>) -> Value {
    Value::Array(xs.into_iter().map(|s| Value::String(s.to_string())).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

pub fn emit_report(report: &CommandReport, format: Format) -> String {
    match format {
        Format::Json => {
            let value = serde_json::to_value(report).expect("reports serialize");
            let mut s = serde_json::to_string(&value).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Tsv => emit_tsv(report),
    }
}

fn emit_tsv(report: &CommandReport) -> String {
    let mut out = String::new();
    if let Some((header, rows)) = &report.table {
        out.push_str(&header.join("\t"));
        out.push('\n');
        for row in rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        return out;
    }
    if let Some(vs) = &report.verdicts {
        out.push_str("id\tname\tpassed\tdetail\n");
        for v in vs {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", v.id, v.name, v.passed, v.detail));
        }
        return out;
    }
    out.push_str("key\tvalue\n");
    for (k, v) in &report.result {
        flatten(k, v, &mut out);
    }
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        Value::Array(xs) => {
            for (i, v) in xs.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}\t{s}\n")),
        other => out.push_str(&format!("{prefix}\t{other}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_become_strings() {
        assert_eq!(int(&BigInt::from(7)), Value::from(7));
        assert_eq!(int(&BigInt::from(u64::MAX)), Value::from(u64::MAX));
        let big = BigInt::from(u64::MAX) * 4;
        assert_eq!(int(&big), Value::String(big.to_string()));
    }

    #[test]
    fn json_round_trip_with_sorted_keys() {
        let mut r = CommandReport::new("components su2 -n 2 -q 3".into());
        r.method = Some("both".into());
        r.set("per_r", int_map(&BTreeMap::from([(3u32, BigInt::from(6)), (2, BigInt::from(1))])));
        r.set("agree", true);
        r.set("abelian", 1);
        let text = emit_report(&r, Format::Json);
        let keys: Vec<&str> = ["abelian", "agree", "command", "method", "per_r", "wall_time_ms", "workers"].to_vec();
        let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
        let back: CommandReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn empty_verdicts_are_an_empty_list() {
        let mut r = CommandReport::new("verify".into());
        r.verdicts = Some(vec![]);
        let v: Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["verdicts"].to_string(), "[]");
        assert!(r.succeeded());
    }

    #[test]
    fn tsv_table_and_fallback() {
        let mut r = CommandReport::new("gb hilbert".into());
        r.table = Some((vec!["degree".into(), "dim".into()], vec![vec!["0".into(), "1".into()]]));
        assert_eq!(emit_report(&r, Format::Tsv), "degree\tdim\n0\t1\n");
        r.table = None;
        r.set("basis", strings(["x", "y^2"]));
        assert_eq!(emit_report(&r, Format::Tsv), "key\tvalue\nbasis.0\tx\nbasis.1\ty^2\n");
    }
}
