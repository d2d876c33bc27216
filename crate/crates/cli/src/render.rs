//! Rendering of payloads as JSON, CSV or plain text.

use exact_algebra::RatFunc;
use serde_json::Value;

use crate::config::Format;
use crate::error::CliError;

/// One payload in all three shapes; [`render`] picks one.
#[derive(Clone, Debug, Default)]
pub struct Table {
    /// One JSON document per computed object; a single one is printed
    /// bare, several as an array.
    pub json: Vec<Value>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub pretty: Vec<String>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            ..Table::default()
        }
    }

    /// Append `cells` followed by the numerator and denominator of `c`.
    pub fn row<const N: usize>(&mut self, cells: [String; N], c: &RatFunc) {
        let mut row: Vec<String> = cells.into();
        row.push(c.num_string());
        row.push(c.den_string());
        self.rows.push(row);
    }
}

pub fn render(table: Table, format: Format) -> Result<String, CliError> {
    let internal = |e: &dyn std::fmt::Display| CliError::Internal(format!("rendering: {e}"));
    match format {
        Format::Json => {
            let doc = match table.json.len() {
                1 => table.json.into_iter().next().expect("one document"),
                _ => Value::Array(table.json),
            };
            serde_json::to_string_pretty(&doc).map_err(|e| internal(&e))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.header).map_err(|e| internal(&e))?;
            for row in &table.rows {
                w.write_record(row).map_err(|e| internal(&e))?;
            }
            let bytes = w.into_inner().map_err(|e| internal(&e))?;
            let text = String::from_utf8(bytes).map_err(|e| internal(&e))?;
            Ok(text.trim_end().to_string())
        }
        Format::Pretty => Ok(table.pretty.join("\n")),
    }
}
