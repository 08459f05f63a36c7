//! Output: one JSON document, an aligned table, or CSV, all from the same report.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{json, Map, Value};

use uberhom::{BigradedRanks, TriGradedRanks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

pub struct Report {
    pub command: &'static str,
    pub metadata: Value,
    pub results: Value,
    pub table: Table,
}

/// Input hash and the vertex order the ranks refer to.
pub fn metadata(sha256: &str, vertices: usize) -> Value {
    json!({ "input_sha256": sha256, "vertex_order": (0..vertices).collect::<Vec<_>>() })
}

pub fn bigraded(r: &BigradedRanks) -> Value {
    Value::Object(
        r.iter()
            .map(|(b, n)| (b.to_string(), json!(n)))
            .collect::<Map<_, _>>(),
    )
}

pub fn trigraded(r: &TriGradedRanks) -> Value {
    Value::Object(
        r.iter()
            .map(|(t, n)| (t.to_string(), json!(n)))
            .collect::<Map<_, _>>(),
    )
}

impl Report {
    pub fn write(&self, format: Format, out: &mut impl Write) -> Result<()> {
        match format {
            Format::Json => {
                let doc = json!({
                    "command": self.command,
                    "metadata": self.metadata,
                    "results": self.results,
                });
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)?;
            }
            Format::Table => write_table(&self.table, out)?,
            Format::Csv => write_csv(&self.table, out)?,
        }
        Ok(())
    }
}

pub fn write_table(t: &Table, out: &mut impl Write) -> Result<()> {
    let mut widths: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(t.header.clone()))?;
    for row in &t.rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

pub fn write_csv(t: &Table, out: &mut impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&t.header)?;
    for row in &t.rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["colouring", "bidegree", "rank"]);
        t.push(vec!["100".into(), "(0,0)".into(), "1".into()]);
        t
    }

    #[test]
    fn csv_quotes_bidegrees() {
        let mut out = Vec::new();
        write_csv(&sample(), &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "colouring,bidegree,rank\n100,\"(0,0)\",1\n"
        );
    }

    #[test]
    fn table_aligns_columns() {
        let mut out = Vec::new();
        write_table(&sample(), &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "colouring  bidegree  rank\n100        (0,0)     1\n"
        );
    }
}
