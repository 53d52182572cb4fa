//! Speed tables and their CSV / JSON encodings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use tetraspeed_core::SpeedValue;

/// How a row's speed was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpeedPath {
    Definitional,
    Formula,
    Oracle,
}

impl fmt::Display for SpeedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpeedPath::Definitional => "definitional",
            SpeedPath::Formula => "formula",
            SpeedPath::Oracle => "oracle",
        })
    }
}

/// One `(a, b)` entry. Every field is a string so that values wider than any
/// native integer survive both encodings unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub a: String,
    pub b: String,
    pub speed: String,
    pub path: SpeedPath,
}

impl TableRow {
    pub fn new(a: impl fmt::Display, b: impl fmt::Display, speed: &SpeedValue, path: SpeedPath) -> Self {
        Self { a: a.to_string(), b: b.to_string(), speed: speed.to_string(), path }
    }

    pub fn speed_value(&self) -> Result<SpeedValue, String> {
        SpeedValue::from_str(&self.speed).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn render(rows: &[TableRow], format: Format) -> Result<String, String> {
    match format {
        Format::Csv => render_csv(rows),
        Format::Json => render_json(rows),
    }
}

pub fn render_csv(rows: &[TableRow]) -> Result<String, String> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    if rows.is_empty() {
        writer.write_record(["a", "b", "speed", "path"]).map_err(|e| e.to_string())?;
    }
    for row in rows {
        writer.serialize(row).map_err(|e| e.to_string())?;
    }
    let bytes = writer.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

pub fn render_json(rows: &[TableRow]) -> Result<String, String> {
    let mut text = serde_json::to_string_pretty(rows).map_err(|e| e.to_string())?;
    text.push('\n');
    Ok(text)
}

pub fn parse(text: &str, format: Format) -> Result<Vec<TableRow>, String> {
    let rows: Vec<TableRow> = match format {
        Format::Csv => csv::Reader::from_reader(text.as_bytes())
            .deserialize()
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?,
        Format::Json => serde_json::from_str(text).map_err(|e| e.to_string())?,
    };
    for row in &rows {
        row.speed_value()?;
    }
    Ok(rows)
}
