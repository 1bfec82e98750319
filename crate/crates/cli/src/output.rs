//! Number rendering and CSV files.
//!
//! Every file starts with one `#` line naming the tool version and the
//! generating command, then a header row, then data rows.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use crate::error::{CliError, Result};

/// `x` rounded to 12 significant digits, printed in the shortest form that
/// reads back to the rounded value.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("exponent notation parses");
    if rounded == 0.0 {
        return "0".to_string();
    }
    let mag = rounded.abs();
    if (1e-5..1e15).contains(&mag) {
        rounded.to_string()
    } else {
        format!("{rounded:e}")
    }
}

/// Rows of numbers under a named header.
///
/// The first `key_columns` columns hold input parameters and are written in
/// exact round-trip form, so any row can be recomputed from its own text.
/// The remaining columns get 12 significant digits.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub key_columns: usize,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(header: &[&str], key_columns: usize, rows: Vec<Vec<f64>>) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            key_columns,
            rows,
        }
    }
}

pub fn metadata_line(detail: &str) -> String {
    format!("# xdiscord {} | {detail}", env!("CARGO_PKG_VERSION"))
}

/// Writes `table` to `path`; an existing file is an error unless `force`.
pub fn write_csv(path: &Path, force: bool, metadata: &str, table: &Table) -> Result<()> {
    let mut opts = OpenOptions::new();
    opts.write(true);
    if force {
        opts.create(true).truncate(true);
    } else {
        opts.create_new(true);
    }
    let file = opts.open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::AlreadyExists => CliError::Exists(path.to_path_buf()),
        _ => CliError::io(path, e),
    })?;
    let mut file = std::io::BufWriter::new(file);
    writeln!(file, "{}", metadata_line(metadata)).map_err(|e| CliError::io(path, e))?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row.iter().enumerate().map(
            |(k, &x)| {
                if k < table.key_columns {
                    x.to_string()
                } else {
                    sig12(x)
                }
            },
        ))?;
    }
    w.flush().map_err(|e| CliError::io(path, e))?;
    Ok(())
}
