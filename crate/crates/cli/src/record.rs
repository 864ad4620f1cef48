//! Machine-readable output records and their CSV/JSON emitters.
//!
//! Exact values are serialised as decimal-free `p/q` strings that parse
//! back to the originating rational; the float column is a fixed
//! 12-significant-digit decimal rendering computed without floating
//! point, so identical invocations produce byte-identical output.

use mgslope::Rational;
use serde::Serialize;
use std::collections::BTreeMap;

pub const FLOAT_DIGITS: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct ValueEntry {
    pub name: String,
    pub exact: String,
    pub float: String,
    pub status: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub params: BTreeMap<String, i64>,
    pub values: Vec<ValueEntry>,
    pub flags: BTreeMap<String, bool>,
}

impl OutputRecord {
    pub fn new() -> Self {
        OutputRecord { params: BTreeMap::new(), values: Vec::new(), flags: BTreeMap::new() }
    }

    pub fn param(&mut self, name: &str, v: i64) -> &mut Self {
        self.params.insert(name.to_string(), v);
        self
    }

    pub fn value(&mut self, name: &str, v: &Rational) -> &mut Self {
        self.values.push(ValueEntry {
            name: name.to_string(),
            exact: v.to_string(),
            float: v.decimal_string(FLOAT_DIGITS),
            status: "exact".to_string(),
        });
        self
    }

    pub fn value_with_status(&mut self, name: &str, v: Option<&Rational>, status: &str) -> &mut Self {
        let (exact, float) = match v {
            Some(v) => (v.to_string(), v.decimal_string(FLOAT_DIGITS)),
            None => (String::new(), String::new()),
        };
        self.values.push(ValueEntry {
            name: name.to_string(),
            exact,
            float,
            status: status.to_string(),
        });
        self
    }

    pub fn flag(&mut self, name: &str, v: bool) -> &mut Self {
        self.flags.insert(name.to_string(), v);
        self
    }
}

/// Column order for a family: parameter names first, then one quoted
/// exact column and one float column per value, then flags.
pub fn csv_header(param_names: &[&str], records: &[OutputRecord]) -> String {
    let mut cols: Vec<String> = param_names.iter().map(|s| s.to_string()).collect();
    if let Some(first) = records.first() {
        for v in &first.values {
            cols.push(v.name.clone());
            cols.push(format!("{}_float", v.name));
        }
        for f in first.flags.keys() {
            cols.push(f.clone());
        }
    }
    cols.join(",")
}

pub fn csv_row(param_names: &[&str], rec: &OutputRecord) -> String {
    let mut cells: Vec<String> = param_names
        .iter()
        .map(|p| rec.params.get(*p).map(|v| v.to_string()).unwrap_or_default())
        .collect();
    for v in &rec.values {
        cells.push(format!("\"{}\"", v.exact));
        cells.push(v.float.clone());
    }
    for flag in rec.flags.values() {
        cells.push(flag.to_string());
    }
    cells.join(",")
}

#[derive(Serialize)]
pub struct TableDocument<'a> {
    pub version: &'a str,
    pub family: &'a str,
    pub records: &'a [OutputRecord],
}

pub fn to_json(family: &str, records: &[OutputRecord]) -> String {
    let doc = TableDocument {
        version: env!("CARGO_PKG_VERSION"),
        family,
        records,
    };
    serde_json::to_string_pretty(&doc).expect("serialisable")
}
