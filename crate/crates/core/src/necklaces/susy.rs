//! The sign-shift rule splitting binary necklaces into allowed and forbidden.
//!
//! A string is rotated by moving its last digit to the front. Every time the
//! moved digit is a 1, the running sign picks up `(-1)^(ones - 1)`, the sign of
//! passing a fermion past the others. When the string first returns to itself
//! the class is forbidden iff the sign is `-1`.

use std::io::Write;

use super::brute::{is_canonical, period, rotate_right};
use crate::{Error, Result};

/// Largest length [`classify_susy`] accepts.
pub const SUSY_MAX_N: u32 = 20;

/// One rotation class of binary strings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NecklaceClass {
    pub n: u32,
    /// Lexicographically smallest rotation.
    pub representative: String,
    /// Smallest nonzero rotation fixing the string; divides `n`.
    pub period: u32,
    /// Sign accumulated after `period` moves.
    pub sign: i8,
}

impl NecklaceClass {
    pub fn forbidden(&self) -> bool {
        self.sign < 0
    }
}

/// All classes of a given length, split by the sign rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SusyClassification {
    pub n: u32,
    pub allowed: Vec<NecklaceClass>,
    pub forbidden: Vec<NecklaceClass>,
}

fn to_string(mask: u32, n: u32) -> String {
    (0..n)
        .map(|i| if mask >> (n - 1 - i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Runs the move-last-digit-to-front procedure on `mask` until it repeats,
/// returning each intermediate `(sign, string)`.
pub fn sign_trace(bits: &str) -> Vec<(i8, String)> {
    let n = bits.len() as u32;
    let mask = u32::from_str_radix(bits, 2).unwrap_or(0);
    let ones = mask.count_ones();
    let mut sign = 1i8;
    let mut cur = mask;
    let mut trace = Vec::new();
    for _ in 0..period(mask, n) {
        if cur & 1 == 1 && ones % 2 == 0 {
            sign = -sign;
        }
        cur = rotate_right(cur, n);
        trace.push((sign, to_string(cur, n)));
    }
    trace
}

/// Classifies every binary necklace of length `n`.
///
/// ```
/// let c = necklace::necklaces::classify_susy(4).unwrap();
/// let forbidden: Vec<_> = c.forbidden.iter().map(|k| k.representative.as_str()).collect();
/// assert_eq!(forbidden, ["0101", "1111"]);
/// ```
pub fn classify_susy(n: u32) -> Result<SusyClassification> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "n" });
    }
    if n > SUSY_MAX_N {
        return Err(Error::TooLarge {
            what: "n",
            value: n.into(),
            max: SUSY_MAX_N.into(),
        });
    }
    let mut allowed = Vec::new();
    let mut forbidden = Vec::new();
    for mask in (0..1u32 << n).filter(|&m| is_canonical(m, n)) {
        let representative = to_string(mask, n);
        let sign = sign_trace(&representative).last().map_or(1, |s| s.0);
        let class = NecklaceClass {
            n,
            representative,
            period: period(mask, n),
            sign,
        };
        if class.forbidden() {
            forbidden.push(class);
        } else {
            allowed.push(class);
        }
    }
    Ok(SusyClassification {
        n,
        allowed,
        forbidden,
    })
}

impl SusyClassification {
    /// Writes `representative,period,sign,verdict` records, sorted by representative.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut all: Vec<&NecklaceClass> = self.allowed.iter().chain(&self.forbidden).collect();
        all.sort();
            let mut w = csv::Writer::from_writer(out);
        w.write_record(["representative", "period", "sign", "verdict"])
            ?;
        for c in all {
            let verdict = if c.forbidden() { "forbidden" } else { "allowed" };
            w.write_record([
                c.representative.clone(),
                c.period.to_string(),
                c.sign.to_string(),
                verdict.to_string(),
            ])
            ?;
        }
        Ok(w.flush()?)
    }
}
