//! Enumeration of binary necklaces by canonical rotation.

use num_bigint::BigInt;

use crate::{Error, Result};

/// Largest length [`brute_necklaces`] accepts.
pub const BRUTE_MAX_N: u32 = 24;

pub(crate) fn rotate_right(mask: u32, n: u32) -> u32 {
    (mask >> 1) | ((mask & 1) << (n - 1))
}

/// Whether `mask` is the smallest of its `n` rotations.
pub(crate) fn is_canonical(mask: u32, n: u32) -> bool {
    let mut r = mask;
    for _ in 1..n {
        r = rotate_right(r, n);
        if r < mask {
            return false;
        }
    }
    true
}

/// The smallest `p >= 1` with `mask` fixed by rotation through `p` places.
pub(crate) fn period(mask: u32, n: u32) -> u32 {
    let mut r = mask;
    for p in 1..=n {
        r = rotate_right(r, n);
        if r == mask {
            return p;
        }
    }
    n
}

/// No two cyclically adjacent set bits; a single bead is its own neighbour.
pub fn no_adjacent_red(mask: u32, n: u32) -> bool {
    mask & rotate_right(mask, n) == 0
}

/// Counts necklaces of length `n` (rotation classes of `n`-bit strings)
/// satisfying `keep`, which must be invariant under rotation.
///
/// ```
/// use necklace::necklaces::{brute_necklaces, no_adjacent_red};
/// assert_eq!(brute_necklaces(4, |_, _| true).unwrap(), 6u32.into());
/// assert_eq!(brute_necklaces(5, no_adjacent_red).unwrap(), 3u32.into());
/// ```
pub fn brute_necklaces(n: u32, keep: impl Fn(u32, u32) -> bool) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "n" });
    }
    if n > BRUTE_MAX_N {
        return Err(Error::TooLarge {
            what: "n",
            value: n.into(),
            max: BRUTE_MAX_N.into(),
        });
    }
    let count = (0..1u32 << n)
        .filter(|&m| is_canonical(m, n) && keep(m, n))
        .count();
    Ok(BigInt::from(count))
}
