//! Circular counts: binary necklaces, the supersymmetric allowed/forbidden
//! split, necklaces without two adjacent red beads, and the Molien series
//! behind their generating functions.

pub mod brute;
pub mod susy;

use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numtheory::{binomial, divisors, euler_phi, exact_quotient, lucas};
use crate::poly::IntPolynomial;
use crate::series::RationalFunction;
use crate::{Error, Result};

pub use brute::{brute_necklaces, no_adjacent_red, BRUTE_MAX_N};
pub use susy::{classify_susy, NecklaceClass, SusyClassification};

fn phi(n: u64) -> BigInt {
    BigInt::from(euler_phi(n).expect("divisors are positive"))
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroArgument { what: "n" })
    } else {
        Ok(())
    }
}

/// Binary necklaces of length `n`: `(1/n) Σ_{d|n} φ(d) 2^{n/d}`.
///
/// ```
/// assert_eq!(necklace::necklaces::macmahon(4).unwrap(), 6u32.into());
/// ```
pub fn macmahon(n: u64) -> Result<BigInt> {
    require_positive(n)?;
    let sum: BigInt = divisors(n)?
        .into_iter()
        .map(|d| phi(d) << (n / d) as usize)
        .sum();
    Ok(exact_quotient(&sum, &BigInt::from(n)))
}

fn parity_sum(n: u64, odd: bool) -> Result<BigInt> {
    require_positive(n)?;
    let sum: BigInt = divisors(n)?
        .into_iter()
        .filter(|d| (d % 2 == 1) == odd)
        .map(|d| phi(d) << (n / d) as usize)
        .sum();
    Ok(exact_quotient(&sum, &BigInt::from(n)))
}

/// Necklaces kept by the sign-shift rule: the odd-`d` part of [`macmahon`].
pub fn allowed(n: u64) -> Result<BigInt> {
    parity_sum(n, true)
}

/// Necklaces removed by the sign-shift rule: the even-`d` part of [`macmahon`].
pub fn forbidden(n: u64) -> Result<BigInt> {
    parity_sum(n, false)
}

/// Necklaces of length `n` with no two adjacent red beads:
/// `(1/n) Σ_{d|n} φ(n/d) L_d`.
pub fn w(n: u64) -> Result<BigInt> {
    require_positive(n)?;
    let sum: BigInt = divisors(n)?
        .into_iter()
        .map(|d| phi(n / d) * lucas(d))
        .sum();
    Ok(exact_quotient(&sum, &BigInt::from(n)))
}

/// As [`w`] with exactly `k` red beads:
/// `(1/(n-k)) Σ_{d | gcd(n,k)} φ(d) C((n-k)/d, k/d)`.
///
/// `W_0(n) = 1`; for `k > n/2` there is no such necklace and the result is 0.
pub fn w_k(n: u64, k: u64) -> Result<BigInt> {
    require_positive(n)?;
    if k == 0 {
        return Ok(BigInt::one());
    }
    if 2 * k > n {
        return Ok(BigInt::zero());
    }
    let sum: BigInt = divisors(n.gcd(&k))?
        .into_iter()
        .map(|d| phi(d) * binomial(((n - k) / d) as i64, (k / d) as i64))
        .sum();
    Ok(exact_quotient(&sum, &BigInt::from(n - k)))
}

/// `W_k(n)` for `0 <= k <= n/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub n: u64,
    pub values: Vec<BigInt>,
}

impl CountRow {
    pub fn new(n: u64) -> Result<Self> {
        let values = (0..=n / 2).map(|k| w_k(n, k)).collect::<Result<_>>()?;
        Ok(CountRow { n, values })
    }

    pub fn total(&self) -> BigInt {
        self.values.iter().sum()
    }
}

/// Writes `n,k,w_k` records for each row, header first.
pub fn write_count_rows_csv<W: Write>(out: W, rows: &[CountRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "k", "w_k"])?;
    for row in rows {
        for (k, v) in row.values.iter().enumerate() {
            w.write_record([row.n.to_string(), k.to_string(), v.to_string()])
                ?;
        }
    }
    Ok(w.flush()?)
}

/// `F_n(x) = Σ_k W_k(n) x^k`.
pub fn rowsum_poly(n: u64) -> Result<IntPolynomial> {
    Ok(IntPolynomial::new(CountRow::new(n)?.values))
}

/// `F_n(x) = (1/n) Σ_{d|n} φ(n/d) V_d(x^{n/d})`, built from [`v_poly`].
pub fn rowsum_poly_by_v(n: u64) -> Result<IntPolynomial> {
    require_positive(n)?;
    let sum: IntPolynomial = divisors(n)?
        .into_iter()
        .map(|d| v_poly(d).compose_monomial((n / d) as usize).scale(&phi(n / d)))
        .sum();
    let n = BigInt::from(n);
    Ok(IntPolynomial::new(
        sum.coeffs().iter().map(|c| exact_quotient(c, &n)).collect(),
    ))
}

/// `F_p(x) = ((p - 1) + V_p(x)) / p` for a prime `p`.
pub fn rowsum_poly_prime(p: u64) -> IntPolynomial {
    let num = v_poly(p) + IntPolynomial::constant(BigInt::from(p - 1));
    let p = BigInt::from(p);
    IntPolynomial::new(num.coeffs().iter().map(|c| exact_quotient(c, &p)).collect())
}

/// `V_m(x) = r^m + s^m` for the roots `r, s` of `z^2 - z - x`, by
/// `V_0 = 2`, `V_1 = 1`, `V_m = V_{m-1} + x V_{m-2}`.
pub fn v_poly(m: u64) -> IntPolynomial {
    let mut prev = IntPolynomial::constant(BigInt::from(2));
    let mut cur = IntPolynomial::one();
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = &cur + &prev.shift(1);
        prev = cur;
        cur = next;
    }
    cur
}

/// `Σ_{k <= m/2} C(m-k, k) x^k / (m-k)` as exact rationals, `m >= 1`.
pub fn v_identity_rhs(m: u64) -> Vec<BigRational> {
    (0..=m / 2)
        .map(|k| {
            BigRational::new(
                binomial((m - k) as i64, k as i64),
                BigInt::from(m - k),
            )
        })
        .collect()
}

/// `Σ_{n >= 2k} W_k(n) x^n = (1/k) Σ_{d|k} φ(d) x^{2k} / (1-x^d)^{k/d}`, put
/// over the common denominator `k ∏_{d|k} (1-x^d)^{φ(k/d)}`.
pub fn diagonal_gf(k: u64) -> Result<RationalFunction> {
    require_positive(k)?;
    let divs = divisors(k)?;
    let common = diagonal_denominator(k)?;
    let mut num = IntPolynomial::zero();
    for &d in &divs {
        let factor = IntPolynomial::binomial_factor(d as usize, -1).pow((k / d) as u32);
        let cofactor = common.div_exact(&factor).expect("each factor divides the common denominator");
        num = num + cofactor.shift(2 * k as usize).scale(&phi(d));
    }
    RationalFunction::new(num, common.scale(&BigInt::from(k)))
}

/// `∏_{d|k} (1-x^d)^{φ(k/d)}`.
pub fn diagonal_denominator(k: u64) -> Result<IntPolynomial> {
    Ok(divisors(k)?
        .into_iter()
        .map(|d| IntPolynomial::binomial_factor(d as usize, -1).pow(euler_phi(k / d).expect("positive") as u32))
        .product())
}

/// Degree-`n` invariants of the cyclic group of order `k` permuting `k`
/// variables: `(1/(n+k)) Σ_{d | gcd(n,k)} φ(d) C((n+k)/d, k/d)`.
pub fn molien_zk(n: u64, k: u64) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::ZeroArgument { what: "k" });
    }
    let sum: BigInt = divisors(n.gcd(&k))?
        .into_iter()
        .map(|d| phi(d) * binomial(((n + k) / d) as i64, (k / d) as i64))
        .sum();
    Ok(exact_quotient(&sum, &BigInt::from(n + k)))
}

/// The Molien series `(1/k) Σ_{d|k} φ(d) / (1-x^d)^{k/d}` as a rational function.
pub fn molien_series_zk(k: u64) -> Result<RationalFunction> {
    require_positive(k)?;
    let mut total: Option<RationalFunction> = None;
    for d in divisors(k)? {
        let term = RationalFunction::new(
            IntPolynomial::constant(phi(d)),
            IntPolynomial::binomial_factor(d as usize, -1).pow((k / d) as u32),
        )?;
        total = Some(match total {
            None => term,
            Some(t) => t.add(&term),
        });
    }
    let total = total.expect("k has divisors");
    RationalFunction::new(total.num, total.den.scale(&BigInt::from(k)))
}

/// First `count` coefficients of `½(1-z)^{-2m} + ½(1-z^2)^{-m}`, the Molien
/// series of the swap `x_l <-> y_l` on `2m` variables.
pub fn molien_s2(m: u32, count: usize) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(Error::ZeroArgument { what: "m" });
    }
    let a = IntPolynomial::binomial_factor(1, -1).pow(2 * m);
    let b = IntPolynomial::binomial_factor(2, -1).pow(m);
    let rf = RationalFunction::new(&a + &b, (&a * &b).scale(&BigInt::from(2)))?;
    Ok(rf
        .series_coefficients(count)?
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "Molien coefficients are integers");
            c.to_integer()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn macmahon_examples() {
        assert_eq!(macmahon(4).unwrap(), b(6));
        assert_eq!(macmahon(1).unwrap(), b(2));
        assert_eq!(macmahon(6).unwrap(), b(14));
        assert!(macmahon(0).is_err());
    }

    #[test]
    fn allowed_forbidden_examples() {
        assert_eq!((allowed(4).unwrap(), forbidden(4).unwrap()), (b(4), b(2)));
        assert_eq!((allowed(1).unwrap(), forbidden(1).unwrap()), (b(2), b(0)));
        assert_eq!((allowed(6).unwrap(), forbidden(6).unwrap()), (b(12), b(2)));
    }

    #[test]
    fn w_examples() {
        assert_eq!(w(5).unwrap(), b(3));
        assert_eq!(w(1).unwrap(), b(1));
        assert_eq!(w(7).unwrap(), b(5));
    }

    #[test]
    fn w_k_examples() {
        assert_eq!(w_k(7, 2).unwrap(), b(2));
        assert_eq!(w_k(10, 3).unwrap(), b(5));
        for n in 1..20 {
            assert_eq!(w_k(n, 0).unwrap(), b(1));
        }
        assert_eq!(w_k(5, 3).unwrap(), b(0));
    }

    #[test]
    fn rowsum_examples() {
        assert_eq!(rowsum_poly(1).unwrap(), IntPolynomial::one());
        assert_eq!(rowsum_poly(5).unwrap(), IntPolynomial::from_i64s(&[1, 1, 1]));
        assert_eq!(rowsum_poly_by_v(5).unwrap(), IntPolynomial::from_i64s(&[1, 1, 1]));
        assert_eq!(rowsum_poly_prime(5), IntPolynomial::from_i64s(&[1, 1, 1]));
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_poly(0), IntPolynomial::from_i64s(&[2]));
        assert_eq!(v_poly(2), IntPolynomial::from_i64s(&[1, 2]));
        assert_eq!(v_poly(5).eval(&b(1)), b(11));
    }

    #[test]
    fn diagonal_examples() {
        let c1 = diagonal_gf(1).unwrap().series_coefficients(8).unwrap();
        let ones: Vec<BigRational> = [0, 0, 1, 1, 1, 1, 1, 1]
            .iter()
            .map(|&v| BigRational::from_integer(b(v)))
            .collect();
        assert_eq!(c1, ones);
        let c2 = diagonal_gf(2).unwrap().series_coefficients(8).unwrap();
        assert_eq!(c2[7], BigRational::from_integer(b(2)));
    }

    #[test]
    fn molien_examples() {
        for k in 1..10 {
            assert_eq!(molien_zk(0, k).unwrap(), b(1));
        }
        assert_eq!(molien_zk(2, 2).unwrap(), b(2));
        let series = molien_series_zk(3).unwrap().series_coefficients(4).unwrap();
        assert_eq!(BigRational::from_integer(molien_zk(3, 3).unwrap()), series[3]);
        assert_eq!(molien_s2(1, 5).unwrap(), vec![b(1), b(1), b(2), b(2), b(3)]);
        assert_eq!(molien_s2(2, 3).unwrap()[2], b(6));
        assert_eq!(molien_s2(2, 1).unwrap()[0], b(1));
    }
}
