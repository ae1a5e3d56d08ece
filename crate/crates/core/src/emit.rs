//! Output formats for tabular reports: one JSON document, CSV with a fixed
//! header, or a column-aligned text table.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::ser::Error as _;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
        }
    }
}

/// Writes a big integer as a bare JSON number, exact at any size.
pub fn big_number<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    RawValue::from_string(v.to_string()).map_err(S::Error::custom)?.serialize(s)
}

/// Anything that renders as rows under a fixed header. Rows must already be
/// in their canonical order.
pub trait Tabular {
    fn header(&self) -> Vec<String>;
    fn rows(&self) -> Vec<Vec<String>>;
    /// Single JSON document (an array of row objects).
    fn json(&self) -> String;
}

pub fn emit_table<T: Tabular + ?Sized>(report: &T, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = report.json();
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut out = report.header().join(",");
            out.push('\n');
            for row in report.rows() {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Table => {
            let header = report.header();
            let rows = report.rows();
            let mut widths: Vec<usize> = header.iter().map(String::len).collect();
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let mut out = String::new();
            for line in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> =
                    line.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                out.push_str(cells.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
    }
}
