//! Byte-stable CSV and JSON rendering of scan rows.

use std::io::{self, Write};

use crate::scan::ScanRow;

pub const CSV_HEADER: &str = "alpha,e_om,e_feynman,rel_diff_e,m_om,m_feynman,rel_diff_m";

/// 12 significant digits, `.` decimal separator, exponent notation.
pub fn format_value(x: f64) -> String {
    format!("{x:.11e}")
}

fn cell(x: f64) -> String {
    if x.is_finite() {
        format_value(x)
    } else {
        String::new() // failed field → empty cell
    }
}

/// Writes the header plus one line per row; `\n` endings, byte-identical
/// across runs for identical input.
pub fn emit_csv<W: Write>(rows: &[ScanRow], out: &mut W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            cell(r.alpha),
            cell(r.e_om),
            cell(r.e_feynman),
            cell(r.rel_diff_e),
            cell(r.m_om),
            cell(r.m_feynman),
            cell(r.rel_diff_m)
        )?;
    }
    Ok(())
}

/// Parses CSV produced by [`emit_csv`]; empty cells come back as NaN.
pub fn parse_csv(text: &str) -> Result<Vec<ScanRow>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => return Err(format!("unexpected CSV header: {other:?}")),
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(format!("line {}: expected 7 fields, got {}", i + 2, fields.len()));
        }
        let parse = |s: &str| -> Result<f64, String> {
            if s.is_empty() {
                return Ok(f64::NAN);
            }
            s.parse::<f64>().map_err(|e| format!("line {}: {e}", i + 2))
        };
        rows.push(ScanRow {
            alpha: parse(fields[0])?,
            e_om: parse(fields[1])?,
            e_feynman: parse(fields[2])?,
            rel_diff_e: parse(fields[3])?,
            m_om: parse(fields[4])?,
            m_feynman: parse(fields[5])?,
            rel_diff_m: parse(fields[6])?,
        });
    }
    Ok(rows)
}

/// JSON array of row objects with the same seven field names; non-finite
/// values serialize as null.
pub fn emit_json<W: Write>(rows: &[ScanRow], out: &mut W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, rows)?;
    writeln!(out)
}
