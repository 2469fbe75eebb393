//! Linear configurations: arrays of `n` vertices with `k` marked, cut from a
//! necklace, counted with or without identifying an array with its mirror.
//!
//! Every closed form here has a brute-force twin in [`brute`].

pub mod brute;
pub mod gf;
pub mod triangle;

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numtheory::{binomial, exact_quotient};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

pub use brute::{brute_configurations, Mode};
pub use gf::{beta_sum_check, gf_bivariate_check, gf_column, gf_column_check};
pub use triangle::NecklaceTriangle;

/// Arrays of `n` vertices with `k` marked and no two marks adjacent.
pub fn f(k: i64, n: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    binomial(n - k + 1, k)
}

/// The necklace binomial coefficient, zero outside `0 <= k <= t`.
///
/// ```
/// use necklace::configurations::necklace_binomial;
/// assert_eq!(necklace_binomial(7, 3), 19u32.into());
/// assert_eq!(necklace_binomial(10, 5), 126u32.into());
/// ```
pub fn necklace_binomial(t: i64, k: i64) -> BigInt {
    if k < 0 || t < 0 || k > t {
        return BigInt::zero();
    }
    let full = binomial(t, k);
    let twice = if t % 2 == 0 && k % 2 == 1 {
        full
    } else {
        full + binomial(t / 2, k / 2)
    };
    exact_quotient(&twice, &BigInt::from(2))
}

/// Arrays of `n` vertices with `k` non-adjacent marks, up to reflection.
///
/// Release builds use the closed form `binom_N(n-k+1, k)`; debug builds also
/// run the recurrence for `n <= 300` and panic if the two disagree.
pub fn g(k: i64, n: i64) -> BigInt {
    let closed = g_closed(k, n);
    if cfg!(debug_assertions) && n <= 300 {
        let rec = g_by_recurrence(k, n);
        assert_eq!(closed, rec, "g({k}, {n}): closed form and recurrence disagree");
    }
    closed
}

/// [`g`] with both routes always evaluated; disagreement is an error.
pub fn g_checked(k: i64, n: i64) -> Result<BigInt> {
    let closed = g_closed(k, n);
    let rec = g_by_recurrence(k, n);
    if closed == rec {
        Ok(closed)
    } else {
        Err(Error::RouteMismatch {
            what: "g",
            k,
            n,
            closed: closed.to_string(),
            recurrence: rec.to_string(),
        })
    }
}

fn g_closed(k: i64, n: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    necklace_binomial(n - k + 1, k)
}

thread_local! {
    static G_MEMO: RefCell<HashMap<(i64, i64), BigInt>> = RefCell::new(HashMap::new());
}

/// `g_k(n) = g_k(n-2) + g_{k-2}(n-4) + C(n-k-1, k-1)`, memoised per thread.
///
/// Base cases: `g_0(n) = 1` for `n >= -1`, `g_k(n) = 0` for `n < 2k - 1`,
/// `g_1(n) = ceil(n/2)`. The value `g_0(-1) = 1` is reached from `g_2(3)`
/// (both ends marked, nothing in between).
pub fn g_by_recurrence(k: i64, n: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::from(u8::from(n >= -1));
    }
    if n < 2 * k - 1 {
        return BigInt::zero();
    }
    if k == 1 {
        return BigInt::from((n + 1) / 2);
    }
    if let Some(v) = G_MEMO.with(|m| m.borrow().get(&(k, n)).cloned()) {
        return v;
    }
    let v = g_by_recurrence(k, n - 2) + g_by_recurrence(k - 2, n - 4) + binomial(n - k - 1, k - 1);
    G_MEMO.with(|m| m.borrow_mut().insert((k, n), v.clone()));
    v
}

/// `g_k(m + 2k - 1)`, which equals `binom_N(m + k, k)`.
pub fn gbar(k: i64, m: i64) -> BigInt {
    g(k, m + 2 * k - 1)
}

/// Arrays of `t` vertices with `k` marks whose only adjacent marks form one
/// run at the left end; reflection identifies only arrays without such a run.
pub fn beta(k: i64, t: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let tail: BigInt = (2..=k).map(|r| binomial(t - k, r - 2)).sum();
    necklace_binomial(t - k + 1, k) + tail
}

/// The two `j`-sums for all configurations of `k` marks on `t` vertices,
/// without the boundary term that [`z`] adds.
///
/// They count every array except the fully marked one (`k = t`), which has
/// no separator to split it into a prefix run and a suffix run.
pub fn z_sums(k: i64, t: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let m = t - k - 1;
    let even: BigInt = (0..=k / 2).map(|j| necklace_binomial(m, k - 2 * j)).sum();
    let weighted: BigInt = (0..=k)
        .map(|j| BigInt::from((j + 1) / 2) * binomial(m, k - j))
        .sum();
    even + weighted
}

/// All configurations of `k` marks on `t` vertices in which every run of two
/// or more marks touches an end, up to reflection.
///
/// ```
/// use necklace::configurations::z;
/// assert_eq!(z(1, 3), 2u32.into());
/// assert_eq!(z(4, 4), 1u32.into());
/// ```
pub fn z(k: i64, t: i64) -> BigInt {
    let boundary = if k == t && k >= 0 { BigInt::one() } else { BigInt::zero() };
    z_sums(k, t) + boundary
}

/// `N_t(y) = Σ_k binom_N(t, k) y^k`, assembled as
/// `((1+y)^t + (1+y^2)^(t/2) (1+y)^(t mod 2)) / 2`.
///
/// ```
/// use necklace::{configurations::necklace_poly, IntPolynomial};
/// assert_eq!(necklace_poly(4), IntPolynomial::from_i64s(&[1, 2, 4, 2, 1]));
/// ```
pub fn necklace_poly(t: u32) -> IntPolynomial {
    let one_plus_y = IntPolynomial::binomial_factor(1, 1);
    let one_plus_y2 = IntPolynomial::binomial_factor(2, 1);
    let twice = one_plus_y.pow(t) + one_plus_y2.pow(t / 2) * one_plus_y.pow(t % 2);
    let two = BigInt::from(2);
    IntPolynomial::new(
        twice
            .into_coeffs()
            .iter()
            .map(|c| exact_quotient(c, &two))
            .collect(),
    )
}

/// Indices `1 <= s < t` with `N_s` dividing `N_t` exactly.
pub fn earlier_exact_divisors(t: u32) -> Vec<u32> {
    let target = necklace_poly(t);
    (1..t).filter(|&s| necklace_poly(s).divides(&target)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn f_examples() {
        assert_eq!(f(0, 5), b(1));
        assert_eq!(f(2, 4), b(3));
        assert_eq!(f(3, 7), b(10));
    }

    #[test]
    fn g_examples() {
        assert_eq!(g(2, 4), b(2));
        assert_eq!(g(3, 7), b(6));
        assert_eq!(g(2, 6), b(6));
    }

    #[test]
    fn g_routes_agree() {
        for k in 0..30 {
            for n in -2..80 {
                assert_eq!(g_checked(k, n).unwrap(), g_closed(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn memo_is_consistent_across_threads() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| (0..20).map(|k| g_by_recurrence(k, 90)).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn gbar_examples() {
        for k in 0..=20 {
            assert_eq!(gbar(k, 0), b(1));
        }
        assert_eq!(gbar(5, 1), b(3));
        assert_eq!(gbar(3, 2), b(6));
        for k in 0..30 {
            for m in 0..30 {
                assert_eq!(gbar(k, m), necklace_binomial(m + k, k));
            }
        }
    }

    #[test]
    fn necklace_binomial_examples() {
        assert_eq!(necklace_binomial(7, 3), b(19));
        assert_eq!(necklace_binomial(10, 5), b(126));
        assert_eq!(necklace_binomial(4, 1), b(2));
        assert_eq!(necklace_binomial(3, 4), b(0));
        assert_eq!(necklace_binomial(-1, 0), b(0));
    }

    #[test]
    fn beta_examples() {
        for t in 0..20 {
            assert_eq!(beta(0, t), b(1));
        }
        assert_eq!(beta(2, 4), g(2, 4) + f(0, 1));
        assert_eq!(beta(2, 4), b(3));
    }

    #[test]
    fn z_examples() {
        for t in 0..20 {
            assert_eq!(z(0, t), b(1));
        }
        assert_eq!(z(1, 3), b(2));
        assert_eq!(z_sums(3, 3), b(0));
        assert_eq!(z(3, 3), b(1));
    }

    #[test]
    fn necklace_poly_examples() {
        assert_eq!(necklace_poly(2), IntPolynomial::from_i64s(&[1, 1, 1]));
        assert_eq!(
            necklace_poly(8),
            IntPolynomial::from_i64s(&[1, 4, 16, 28, 38, 28, 16, 4, 1])
        );
        assert_eq!(necklace_poly(0), IntPolynomial::one());
        assert_eq!(necklace_poly(3), IntPolynomial::from_i64s(&[1, 1]) * IntPolynomial::from_i64s(&[1, 1, 1]));
    }
}
