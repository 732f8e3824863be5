use std::collections::BTreeMap;
use std::io;

use serde::{Deserialize, Serialize};

use crate::exactnum::BigCount;

/// Output encoding chosen with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// One `(index, value)` pair. Values are decimal strings so no magnitude
/// loses precision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub index: String,
    pub value: String,
}

/// Machine-readable result of one command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub values: Vec<Entry>,
}

impl OutputRecord {
    pub fn new(command: impl Into<String>) -> Self {
        OutputRecord {
            command: command.into(),
            parameters: BTreeMap::new(),
            values: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, index: impl ToString, value: impl ToString) {
        self.values.push(Entry {
            index: index.to_string(),
            value: value.to_string(),
        });
    }

    pub fn push_count(&mut self, index: impl ToString, value: &BigCount) {
        self.push(index, value);
    }
}

/// A record plus its plain-text rendering and optional comment header.
pub struct Rendered {
    pub record: OutputRecord,
    pub plain: String,
    /// Written as `# ...` before plain and CSV output.
    pub header: Option<String>,
}

impl Rendered {
    pub fn new(record: OutputRecord, plain: String) -> Self {
        Rendered {
            record,
            plain,
            header: None,
        }
    }

    /// Plain output is the single value on its own line.
    pub fn single(record: OutputRecord) -> Self {
        let plain = record
            .values
            .iter()
            .map(|e| e.value.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        Rendered::new(record, plain + "\n")
    }

    pub fn write(&self, format: Format, out: &mut dyn io::Write) -> io::Result<()> {
        match format {
            Format::Plain => {
                if let Some(h) = &self.header {
                    writeln!(out, "# {h}")?;
                }
                out.write_all(self.plain.as_bytes())
            }
            Format::Csv => {
                if let Some(h) = &self.header {
                    writeln!(out, "# {h}")?;
                }
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["index", "value"])?;
                for e in &self.record.values {
                    w.write_record([&e.index, &e.value])?;
                }
                w.flush()
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.record)?;
                writeln!(out)
            }
        }
    }
}
