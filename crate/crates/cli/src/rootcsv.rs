//! The point-dump schema `family,t,root_re,root_im,u,v,residual`.
//!
//! Floats are written with 17 significant digits so that a dump parses back
//! to the same bits. `u`, `v` and `residual` are empty where undefined.

use std::io::{Read, Write};

use necklace::Complex64;

use crate::{CliError, CliResult};

pub const HEADER: [&str; 7] = ["family", "t", "root_re", "root_im", "u", "v", "residual"];

#[derive(Debug, Clone, PartialEq)]
pub struct RootRow {
    pub family: String,
    pub t: u32,
    pub root: Complex64,
    pub u: Option<f64>,
    pub v: Option<f64>,
    pub residual: Option<f64>,
}

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(float).unwrap_or_default()
}

pub fn write_root_csv<W: Write>(out: W, rows: &[RootRow]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record([
            r.family.clone(),
            r.t.to_string(),
            float(r.root.re),
            float(r.root.im),
            opt(r.u),
            opt(r.v),
            opt(r.residual),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Parses a dump, reporting the 1-based line of the first malformed record.
pub fn read_root_csv<R: Read>(input: R) -> CliResult<Vec<RootRow>> {
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers()?.clone();
    if header.iter().collect::<Vec<_>>() != HEADER {
        return Err(parse_error(1, format!("expected header {}", HEADER.join(","))));
    }
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() != HEADER.len() {
            return Err(parse_error(line, format!("expected 7 fields, found {}", rec.len())));
        }
        let num = |i: usize| -> CliResult<f64> {
            rec[i]
                .trim()
                .parse()
                .map_err(|_| parse_error(line, format!("{}: not a number: {:?}", HEADER[i], &rec[i])))
        };
        let maybe = |i: usize| -> CliResult<Option<f64>> {
            if rec[i].trim().is_empty() {
                Ok(None)
            } else {
                num(i).map(Some)
            }
        };
        rows.push(RootRow {
            family: rec[0].to_string(),
            t: rec[1]
                .trim()
                .parse()
                .map_err(|_| parse_error(line, format!("t: not an index: {:?}", &rec[1])))?,
            root: Complex64::new(num(2)?, num(3)?),
            u: maybe(4)?,
            v: maybe(5)?,
            residual: maybe(6)?,
        });
    }
    Ok(rows)
}

fn parse_error(line: u64, message: String) -> CliError {
    CliError::Library(necklace::Error::Parse { line, message })
}
