//! Shape of coefficient sequences: unimodality and iterated log-concavity.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// One application of `a_n -> a_n^2 - a_{n-1} a_{n+1}`, with `a_{-1} = a_len = 0`.
pub fn logconcave_step(a: &[BigInt]) -> Vec<BigInt> {
    let zero = BigInt::zero();
    (0..a.len())
        .map(|i| {
            let prev = if i == 0 { &zero } else { &a[i - 1] };
            let next = a.get(i + 1).unwrap_or(&zero);
            &a[i] * &a[i] - prev * next
        })
        .collect()
}

pub fn is_logconcave(a: &[BigInt]) -> bool {
    logconcave_step(a).iter().all(|c| !c.is_negative())
}

/// Weakly increasing up to some index and weakly decreasing after it.
pub fn is_unimodal(a: &[BigInt]) -> bool {
    let mut descending = false;
    for w in a.windows(2) {
        if w[1] > w[0] {
            if descending {
                return false;
            }
        } else if w[1] < w[0] {
            descending = true;
        }
    }
    true
}

/// The largest `j <= max_depth` such that the first `j` iterates of the
/// log-concavity operator are all nonnegative.
///
/// Returns `None` when `a` itself has a negative entry.
pub fn logconcave_depth(a: &[BigInt], max_depth: usize) -> Option<usize> {
    if a.iter().any(Signed::is_negative) {
        return None;
    }
    let mut cur = a.to_vec();
    for depth in 0..max_depth {
        cur = logconcave_step(&cur);
        if cur.iter().any(Signed::is_negative) {
            return Some(depth);
        }
    }
    Some(max_depth)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn step_examples() {
        assert_eq!(logconcave_step(&v(&[1, 1])), v(&[1, 1]));
        assert_eq!(logconcave_step(&v(&[1, 2, 4, 2, 1])), v(&[1, 0, 12, 0, 1]));
        assert_eq!(logconcave_step(&v(&[1, 3, 1])), v(&[1, 8, 1]));
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&v(&[1, 2, 1])));
        assert!(!is_unimodal(&v(&[1, 0, 1])));
        assert!(is_unimodal(&v(&[1, 1, 1])));
        assert!(is_unimodal(&v(&[])));
        assert!(is_unimodal(&v(&[5, 3, 1])));
    }

    #[test]
    fn depth_of_eighth_necklace_row() {
        let row = v(&[1, 4, 16, 28, 38, 28, 16, 4, 1]);
        let first = logconcave_step(&row);
        assert_eq!(first, v(&[1, 0, 144, 176, 660, 176, 144, 0, 1]));
        // 0^2 - 1 * 144 < 0 at the second iterate.
        let second = logconcave_step(&first);
        assert_eq!(second[1], BigInt::from(-144));
        assert_eq!(logconcave_depth(&row, 3), Some(1));
    }

    #[test]
    fn rows_of_fixed_points_reach_the_cap() {
        // [1, 1] and [1, 2, 2, 1] are fixed by the operator.
        assert_eq!(logconcave_depth(&v(&[1, 1]), 7), Some(7));
        assert_eq!(logconcave_depth(&v(&[1, 2, 2, 1]), 7), Some(7));
    }

    #[test]
    fn depth_stops_at_first_negative_iterate() {
        // [1, 0, 1] -> [1, -1, 1].
        assert_eq!(logconcave_depth(&v(&[1, 0, 1]), 5), Some(0));
        assert_eq!(logconcave_depth(&v(&[1, -1]), 5), None);
        assert!(!is_logconcave(&v(&[1, 0, 1])));
    }
}
