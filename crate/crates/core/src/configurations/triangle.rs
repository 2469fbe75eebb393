//! The Losanitsch triangle of necklace binomial coefficients.

use std::io::{Read, Write};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numtheory::exact_quotient;
use crate::{Error, Result};

/// Row `t` of the triangle, `binom_N(t, k)` for `0 <= k <= t`.
///
/// Uses the multiplicative update for `C(t, k)` instead of one binomial per
/// entry, so a full row costs `O(t)` big-integer operations.
pub fn triangle_row(t: u64) -> Vec<BigInt> {
    let full = binomial_row(t);
    let half = binomial_row(t / 2);
    let two = BigInt::from(2);
    (0..=t as usize)
        .map(|k| {
            let twice = if t % 2 == 0 && k % 2 == 1 {
                full[k].clone()
            } else {
                &full[k] + &half[k / 2]
            };
            exact_quotient(&twice, &two)
        })
        .collect()
}

fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::from(1);
    for k in 0..=n {
        row.push(c.clone());
        c = c * (n - k) / (k + 1);
    }
    row
}

/// Rows `0..=tmax` of necklace binomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecklaceTriangle {
    pub tmax: u64,
    pub rows: Vec<Vec<BigInt>>,
}

impl NecklaceTriangle {
    pub fn new(tmax: u64) -> Self {
        NecklaceTriangle {
            tmax,
            rows: (0..=tmax).map(triangle_row).collect(),
        }
    }

    pub fn get(&self, t: usize, k: usize) -> BigInt {
        self.rows
            .get(t)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Writes rows `1..=tmax` as `t,k,value` records with a header line.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        write_csv_header(&mut w)?;
        for t in 1..=self.tmax {
            write_csv_row(&mut w, t, &self.rows[t as usize])?;
        }
        w.flush().map_err(io_error)
    }

    /// Reads the format produced by [`NecklaceTriangle::write_csv`].
    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
        let mut rdr = csv::Reader::from_reader(input);
        for (i, rec) in rdr.records().enumerate() {
            let line = i as u64 + 2;
            let rec = rec.map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            let field = |idx: usize| -> Result<&str> {
                rec.get(idx).ok_or(Error::Parse {
                    line,
                    message: format!("missing column {idx}"),
                })
            };
            let parse_usize = |s: &str| {
                s.parse::<usize>().map_err(|e| Error::Parse {
                    line,
                    message: e.to_string(),
                })
            };
            let t = parse_usize(field(0)?)?;
            let k = parse_usize(field(1)?)?;
            let v: BigInt = field(2)?.parse().map_err(|_| Error::Parse {
                line,
                message: format!("bad integer {:?}", rec.get(2)),
            })?;
            let in_order = if k == 0 {
                t == rows.len()
            } else {
                t + 1 == rows.len() && k == rows[t].len()
            };
            if !in_order {
                return Err(Error::Parse {
                    line,
                    message: format!("entry ({t}, {k}) out of order"),
                });
            }
            if k == 0 {
                rows.push(vec![v]);
            } else {
                rows.last_mut().expect("row exists").push(v);
            }
        }
        Ok(NecklaceTriangle {
            tmax: rows.len() as u64 - 1,
            rows,
        })
    }

    /// JSON object `{"tmax": n, "rows": [[...], ...]}` holding rows `1..=tmax`
    /// as decimal strings; `rows[0]` is row 1.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "tmax": self.tmax,
            "first_row": 1,
            "rows": self.rows[1..]
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn row_sums_hold(&self) -> bool {
        self.rows.iter().enumerate().skip(1).all(|(t, r)| {
            let s: BigInt = r.iter().sum();
            s == (BigInt::from(1) << (t - 1)) + (BigInt::from(1) << ((t - 1) / 2))
        })
    }
}

pub fn write_csv_header<W: Write>(w: &mut csv::Writer<W>) -> Result<()> {
    w.write_record(["t", "k", "value"]).map_err(csv_error)
}

/// Appends row `t` to a `t,k,value` CSV stream.
pub fn write_csv_row<W: Write>(w: &mut csv::Writer<W>, t: u64, row: &[BigInt]) -> Result<()> {
    for (k, v) in row.iter().enumerate() {
        w.write_record([t.to_string(), k.to_string(), v.to_string()])
            .map_err(csv_error)?;
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> Error {
    e.into()
}

fn io_error(e: std::io::Error) -> Error {
    e.into()
}
