//! Record serialization shared by the studies, the batch runner and the
//! command line. Rows are flat structs whose first field is a schema tag.

use std::io::{Read, Write};
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::invalid("format", format!("unknown format `{other}` (csv|json)"))),
        }
    }
}

impl Format {
    /// File extension without the dot.
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }

    /// Guess the format from a path's extension.
    pub fn from_path(path: &std::path::Path) -> Option<Self> {
        path.extension().and_then(|e| e.to_str()).and_then(|e| e.parse().ok())
    }
}

/// Write rows as CSV (header from field names, `None` as an empty cell) or
/// as a pretty-printed JSON array.
pub fn write_records<T: Serialize, W: Write>(rows: &[T], format: Format, mut out: W) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

/// Render rows to a string.
pub fn records_to_string<T: Serialize>(rows: &[T], format: Format) -> Result<String> {
    let mut buf = Vec::new();
    write_records(rows, format, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}

/// Read rows from CSV (with header) or a JSON array.
pub fn read_records<T: DeserializeOwned, R: Read>(input: R, format: Format) -> Result<Vec<T>> {
    match format {
        Format::Csv => {
            let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
            r.deserialize().map(|row| row.map_err(Error::from)).collect()
        }
        Format::Json => Ok(serde_json::from_reader(input)?),
    }
}
