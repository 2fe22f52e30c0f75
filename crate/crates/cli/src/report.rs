//! Exact-valued reports rendered as text, CSV or JSON.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: impl Into<String>, columns: &[&str]) -> Self {
        Table { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn with_columns(name: impl Into<String>, columns: Vec<String>) -> Self {
        Table { name: name.into(), columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

/// Output of one command: tables of exact values and pass/fail checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    pub fn table(&mut self, table: Table) {
        self.tables.push(table);
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push(Check { name: name.into(), ok });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn table_named(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("report serializes") + "\n",
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.tables {
            writeln!(out, "# {}", t.name).unwrap();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|i| t.rows.iter().map(|r| r[i].chars().count()).chain([t.columns[i].chars().count()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(&t.columns)).unwrap();
            for r in &t.rows {
                writeln!(out, "{}", line(r)).unwrap();
            }
            out.push('\n');
        }
        for c in &self.checks {
            writeln!(out, "{}: {}", c.name, if c.ok { "OK" } else { "FAILED" }).unwrap();
        }
        out
    }

    /// One block per table, each headed by its column names; the first
    /// field of every record is the table name.
    fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        for t in &self.tables {
            w.write_record(std::iter::once("table").chain(t.columns.iter().map(String::as_str))).unwrap();
            for r in &t.rows {
                w.write_record(std::iter::once(t.name.as_str()).chain(r.iter().map(String::as_str))).unwrap();
            }
        }
        if !self.checks.is_empty() {
            w.write_record(["table", "check", "status"]).unwrap();
            for c in &self.checks {
                w.write_record(["checks", c.name.as_str(), if c.ok { "OK" } else { "FAILED" }]).unwrap();
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 input")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "command": self.command,
            "tables": self.tables.iter().map(|t| json!({
                "name": t.name,
                "columns": t.columns,
                "rows": t.rows,
            })).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(|c| json!({"name": c.name, "ok": c.ok})).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo");
        let mut t = Table::new("numbers", &["d", "n_d"]);
        t.push(vec!["1".into(), "2875".into()]);
        t.push(vec!["2".into(), "609250".into()]);
        r.table(t);
        r.check("integral", true);
        r
    }

    #[test]
    fn text_is_aligned() {
        let text = sample().render(Format::Text);
        assert!(text.contains("# numbers\nd     n_d\n1    2875\n2  609250\n"));
        assert!(text.ends_with("integral: OK\n"));
    }

    #[test]
    fn csv_and_json() {
        let csv = sample().render(Format::Csv);
        assert!(csv.starts_with("table,d,n_d\nnumbers,1,2875\n"));
        let v: Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["tables"][0]["rows"][1][1], "609250");
    }
}
