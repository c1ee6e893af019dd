//! Text, JSON and CSV rendering. Integers that may exceed 64 bits are
//! written as decimal strings in JSON.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use sweepcover::PTable;

use crate::Format;

/// A header plus string cells, rendered uniformly by [`render_rows`].
#[derive(Debug, Clone, Default)]
pub struct Rows {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Rows {
    pub fn new(header: &[&str]) -> Self {
        Rows {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for row in rows {
        out += &line(row);
    }
    out
}

fn to_csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}

/// JSON renders rows as an array of objects keyed by header; every cell is
/// a string.
pub fn render_rows(rows: &Rows, format: Format) -> String {
    match format {
        Format::Text => aligned(&rows.header, &rows.rows),
        Format::Csv => to_csv(&rows.header, &rows.rows),
        Format::Json => {
            let items: Vec<Value> = rows
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = rows
                        .header
                        .iter()
                        .cloned()
                        .zip(row.iter().map(|c| Value::String(c.clone())))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            serde_json::to_string_pretty(&items).expect("json") + "\n"
        }
    }
}

pub fn table_to_text(table: &PTable) -> String {
    let mut header = vec!["delta\\n".to_string()];
    header.extend(table.ns.iter().map(|n| n.to_string()));
    let rows: Vec<Vec<String>> = table
        .deltas
        .iter()
        .zip(&table.values)
        .map(|(d, vals)| {
            let mut row = vec![d.to_string()];
            row.extend(vals.iter().map(|v| v.to_string()));
            row
        })
        .collect();
    aligned(&header, &rows)
}

/// Header `delta,<n1>,<n2>,...`; one row per delta. Gamma is not stored.
pub fn table_to_csv(table: &PTable) -> String {
    let mut header = vec!["delta".to_string()];
    header.extend(table.ns.iter().map(|n| n.to_string()));
    let rows: Vec<Vec<String>> = table
        .deltas
        .iter()
        .zip(&table.values)
        .map(|(d, vals)| {
            let mut row = vec![d.to_string()];
            row.extend(vals.iter().map(|v| v.to_string()));
            row
        })
        .collect();
    to_csv(&header, &rows)
}

#[derive(Debug, Serialize, Deserialize)]
struct TableJson {
    gamma: usize,
    ns: Vec<usize>,
    rows: Vec<RowJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RowJson {
    delta: usize,
    values: Vec<String>,
}

pub fn table_to_json(table: &PTable) -> String {
    let doc = TableJson {
        gamma: table.gamma,
        ns: table.ns.clone(),
        rows: table
            .deltas
            .iter()
            .zip(&table.values)
            .map(|(&delta, vals)| RowJson {
                delta,
                values: vals.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("json") + "\n"
}

#[derive(Debug, Error)]
pub enum TableParseError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("bad cell {0:?}")]
    Cell(String),
    #[error("row has {got} values, expected {expected}")]
    Width { got: usize, expected: usize },
}

fn cell<T: std::str::FromStr>(s: &str) -> Result<T, TableParseError> {
    s.trim()
        .parse()
        .map_err(|_| TableParseError::Cell(s.to_string()))
}

/// Reads back the output of [`table_to_json`].
pub fn table_from_json(text: &str) -> Result<PTable, TableParseError> {
    let doc: TableJson = serde_json::from_str(text)?;
    let mut deltas = Vec::new();
    let mut values = Vec::new();
    for row in doc.rows {
        if row.values.len() != doc.ns.len() {
            return Err(TableParseError::Width {
                got: row.values.len(),
                expected: doc.ns.len(),
            });
        }
        deltas.push(row.delta);
        values.push(
            row.values
                .iter()
                .map(|v| cell::<BigUint>(v))
                .collect::<Result<_, _>>()?,
        );
    }
    Ok(PTable {
        gamma: doc.gamma,
        deltas,
        ns: doc.ns,
        values,
    })
}

/// Reads back the output of [`table_to_csv`]. CSV carries no gamma, so the
/// caller supplies it.
pub fn table_from_csv(text: &str, gamma: usize) -> Result<PTable, TableParseError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let ns: Vec<usize> = reader
        .headers()?
        .iter()
        .skip(1)
        .map(cell)
        .collect::<Result<_, _>>()?;
    let mut deltas = Vec::new();
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record?;
        let mut fields = record.iter();
        let delta = cell(fields.next().unwrap_or_default())?;
        let vals: Vec<BigUint> = fields.map(cell).collect::<Result<_, _>>()?;
        if vals.len() != ns.len() {
            return Err(TableParseError::Width {
                got: vals.len(),
                expected: ns.len(),
            });
        }
        deltas.push(delta);
        values.push(vals);
    }
    Ok(PTable {
        gamma,
        deltas,
        ns,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sweepcover::p_table;

    #[test]
    fn table_round_trips() {
        let table = p_table(2..=9, 1..=8, 0).unwrap();
        assert_eq!(table_from_json(&table_to_json(&table)).unwrap(), table);
        assert_eq!(table_from_csv(&table_to_csv(&table), 0).unwrap(), table);
    }

    #[test]
    fn rows_render() {
        let mut rows = Rows::new(&["n", "p"]);
        rows.push(vec!["1".into(), "12345678901234567890123".into()]);
        assert_eq!(
            render_rows(&rows, Format::Csv),
            "n,p\n1,12345678901234567890123\n"
        );
        let json: Value = serde_json::from_str(&render_rows(&rows, Format::Json)).unwrap();
        assert_eq!(json[0]["p"], "12345678901234567890123");
        assert!(render_rows(&rows, Format::Text).starts_with("n"));
    }
}
