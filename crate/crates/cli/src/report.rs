//! CSV and JSON report files.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::config::RunConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Report<'a, R: Serialize> {
    pub schema_version: u32,
    pub command: &'a str,
    pub passed: bool,
    pub summary: &'a str,
    pub config: &'a RunConfig,
    pub result: &'a R,
}

/// Writes `<dir>/<stem>.csv` and `<dir>/<stem>.json`.
pub fn write_reports<R: Serialize, Row: Serialize>(
    dir: &Path,
    stem: &str,
    report: &Report<'_, R>,
    rows: &[Row],
) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut table = csv::Writer::from_path(dir.join(format!("{stem}.csv")))?;
    for row in rows {
        table.serialize(row)?;
    }
    table.flush()?;

    let mut json = BufWriter::new(File::create(dir.join(format!("{stem}.json")))?);
    serde_json::to_writer_pretty(&mut json, report)?;
    json.write_all(b"\n")?;
    json.flush()
}
