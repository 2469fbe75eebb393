//! Exhaustive enumeration of marked linear arrays.

use num_bigint::BigInt;

use crate::{Error, Result};

/// Largest array length the enumerator accepts.
pub const MAX_N: u32 = 28;

/// Which arrays are admitted and when mirror images are identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// No two marks adjacent; an array and its mirror count once.
    NoAdjacent,
    /// Either no two marks adjacent (mirrors identified), or exactly one run
    /// of two or more marks and it starts at the left end (mirrors distinct).
    MedallionLeft,
    /// Every run of two or more marks touches an end; mirrors identified.
    Full,
}

fn reverse(mask: u32, n: u32) -> u32 {
    if n == 0 {
        0
    } else {
        mask.reverse_bits() >> (32 - n)
    }
}

fn no_adjacent(mask: u32) -> bool {
    mask & (mask >> 1) == 0
}

fn admitted(mask: u32, n: u32, mode: Mode) -> bool {
    let mirror_ok = mask <= reverse(mask, n);
    match mode {
        Mode::NoAdjacent => no_adjacent(mask) && mirror_ok,
        Mode::MedallionLeft => {
            if no_adjacent(mask) {
                return mirror_ok;
            }
            let run = mask.trailing_ones();
            run >= 2 && no_adjacent(mask >> run)
        }
        Mode::Full => {
            if !mirror_ok {
                return false;
            }
            let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
            let left = mask.trailing_ones().min(n);
            let right = (mask << (32 - n.max(1))).leading_ones().min(n);
            if left == n {
                return true;
            }
            let interior = mask & !((1u32 << left) - 1) & !(full & !(full >> right));
            no_adjacent(interior)
        }
    }
}

/// Next integer with the same number of set bits (Gosper's hack).
fn next_combination(x: u32) -> Option<u32> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Counts arrays of `n` vertices with exactly `k` marks admitted by `mode`.
///
/// ```
/// use necklace::configurations::{brute_configurations, Mode};
/// assert_eq!(brute_configurations(2, 4, Mode::NoAdjacent).unwrap(), 2u32.into());
/// assert_eq!(brute_configurations(1, 3, Mode::Full).unwrap(), 2u32.into());
/// ```
pub fn brute_configurations(k: u32, n: u32, mode: Mode) -> Result<BigInt> {
    if n > MAX_N {
        return Err(Error::TooLarge {
            what: "n",
            value: n.into(),
            max: MAX_N.into(),
        });
    }
    if k > n {
        return Ok(BigInt::from(0));
    }
    if k == 0 {
        return Ok(BigInt::from(u8::from(admitted(0, n, mode))));
    }
    let limit = 1u32 << n;
    let mut mask = (1u32 << k) - 1;
    let mut count: u64 = 0;
    while mask < limit {
        if admitted(mask, n, mode) {
            count += 1;
        }
        match next_combination(mask) {
            Some(m) => mask = m,
            None => break,
        }
    }
    Ok(BigInt::from(count))
}
