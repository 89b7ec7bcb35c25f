use std::io::{self, Write};

use num_bigint::BigInt;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Flat rows for CSV output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }
}

/// What a command produced: the JSON document, its CSV rendering, and
/// whether a verification inside it failed.
#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub table: Table,
    pub ok: bool,
}

impl Output {
    pub fn new(json: Value, table: Table) -> Self {
        Self { json, table, ok: true }
    }

    pub fn with_status(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer(&mut *out, &self.json)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.table.header)?;
                for row in &self.table.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
        }
    }
}

pub fn big_strings<'a>(v: impl IntoIterator<Item = &'a BigInt>) -> Vec<String> {
    v.into_iter().map(ToString::to_string).collect()
}

/// A sequence as a JSON array of decimal strings, one `n,value` row per term.
pub fn sequence(terms: &[BigInt]) -> Output {
    let mut table = Table::new(["n", "value"]);
    for (n, t) in terms.iter().enumerate() {
        table.push([n.to_string(), t.to_string()]);
    }
    Output::new(Value::from(big_strings(terms)), table)
}
