use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::tables::{ComparisonRow, Table};
use crate::error::{Error, Result};
use crate::potentials::UnitSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown format `{other}` (text, csv, json)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Header block of every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub kind: String,
    pub title: String,
    pub units: UnitSystem,
    /// Unit in which the energies of the report are quoted.
    pub energy_unit: String,
    pub notes: Vec<String>,
    pub config: BTreeMap<String, String>,
}

impl Meta {
    pub fn new(kind: impl Into<String>, title: impl Into<String>, units: UnitSystem) -> Self {
        let energy_unit = energy_unit(&units);
        Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            kind: kind.into(),
            title: title.into(),
            units,
            energy_unit,
            notes: Vec::new(),
            config: BTreeMap::new(),
        }
    }
}

/// Name of the energy unit of a preset.
pub fn energy_unit(units: &UnitSystem) -> String {
    match units.label.as_str() {
        "ev-nm" => "eV".into(),
        "natural" => "natural units (hbar = m = 1)".into(),
        other => format!("{other} units"),
    }
}

/// A row type that can be laid out as text, CSV or JSON.
pub trait Record: Serialize {
    /// Column names, in serialization order.
    const COLUMNS: &'static [&'static str];
    /// Key of the row array in JSON output.
    const COLLECTION: &'static str = "rows";

    fn text_cells(&self) -> Vec<String>;
}

/// Report document as written to JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub meta: Meta,
    pub rows: Vec<T>,
}

impl Record for ComparisonRow {
    const COLUMNS: &'static [&'static str] = &[
        "state",
        "oracle",
        "method_primary",
        "method_secondary",
        "abs_dev",
        "rel_dev",
    ];

    fn text_cells(&self) -> Vec<String> {
        vec![
            self.state.clone(),
            sig6(self.oracle),
            sig6(self.method_primary),
            self.method_secondary.map_or_else(|| "-".into(), sig6),
            sig6(self.abs_dev),
            sig6(self.rel_dev),
        ]
    }
}

/// Six significant digits, fixed notation for moderate magnitudes.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..6).contains(&exp) {
        let s = format!("{:.*}", (5 - exp).max(0) as usize, x);
        // Rounding may carry into a new leading digit (9.999996 → 10.00000).
        let digits = s.chars().filter(char::is_ascii_digit).count();
        let leading_zeros = if exp < 0 { (-exp) as usize } else { 0 };
        if digits > 6 + leading_zeros && exp < 5 {
            return format!("{:.*}", (4 - exp).max(0) as usize, x);
        }
        s
    } else {
        format!("{x:.5e}")
    }
}

pub fn render_table(table: &Table, format: Format) -> Result<Vec<u8>> {
    let mut meta = Meta::new(table.id.to_string(), table.title.clone(), table.units.clone());
    meta.energy_unit = table.unit.clone();
    meta.notes = table.notes.clone();
    render_records(&meta, &table.rows, format)
}

/// Renders a table with an explicit header block, for callers that record the
/// computation units and configuration.
pub fn render_records<T: Record>(meta: &Meta, rows: &[T], format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Text => Ok(render_text(meta, rows).into_bytes()),
        Format::Csv => render_csv(rows),
        Format::Json => render_json(meta, rows),
    }
}

fn render_text<T: Record>(meta: &Meta, rows: &[T]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(Record::text_cells).collect();
    let widths: Vec<usize> = T::COLUMNS
        .iter()
        .enumerate()
        .map(|(i, h)| {
            cells
                .iter()
                .map(|c| c[i].chars().count())
                .chain([h.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    out.push_str(&format!("# {}\n", meta.title));
    out.push_str(&format!("# energies in {}\n", meta.energy_unit));
    for note in &meta.notes {
        out.push_str(&format!("# {note}\n"));
    }
    let line = |out: &mut String, row: &[String]| {
        let padded: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(
                |(i, (c, w))| {
                    if i == 0 {
                        format!("{c:<w$}")
                    } else {
                        format!("{c:>w$}")
                    }
                },
            )
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    let header: Vec<String> = T::COLUMNS.iter().map(|s| s.to_string()).collect();
    line(&mut out, &header);
    for row in &cells {
        line(&mut out, row);
    }
    out
}

fn render_csv<T: Record>(rows: &[T]) -> Result<Vec<u8>> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer.write_record(T::COLUMNS).map_err(csv_error)?;
    for row in rows {
        writer.serialize(row).map_err(csv_error)?;
    }
    writer.into_inner().map_err(|e| Error::Io(e.to_string()))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn render_json<T: Record>(meta: &Meta, rows: &[T]) -> Result<Vec<u8>> {
    let mut doc = serde_json::Map::new();
    doc.insert("meta".into(), serde_json::to_value(meta).map_err(json_error)?);
    doc.insert(T::COLLECTION.into(), serde_json::to_value(rows).map_err(json_error)?);
    let mut out = serde_json::to_vec_pretty(&doc).map_err(json_error)?;
    out.push(b'\n');
    Ok(out)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Io(e.to_string())
}

/// Reads back a JSON report produced by [`render_records`].
pub fn parse_json<T: Record + DeserializeOwned>(bytes: &[u8]) -> Result<Document<T>> {
    let mut value: serde_json::Value = serde_json::from_slice(bytes).map_err(json_error)?;
    let obj = value
        .as_object_mut()
        .ok_or_else(|| Error::Io("report is not a JSON object".into()))?;
    let meta = obj
        .remove("meta")
        .ok_or_else(|| Error::Io("report has no `meta`".into()))?;
    let rows = obj
        .remove(T::COLLECTION)
        .ok_or_else(|| Error::Io(format!("report has no `{}`", T::COLLECTION)))?;
    Ok(Document {
        meta: serde_json::from_value(meta).map_err(json_error)?,
        rows: serde_json::from_value(rows).map_err(json_error)?,
    })
}
