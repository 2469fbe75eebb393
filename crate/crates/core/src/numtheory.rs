//! Exact arithmetic primitives shared by the counting modules.
//!
//! Fibonacci and Lucas numbers follow the offsets used throughout this crate:
//! `F_0 = F_1 = 1` and `L_0 = 2, L_1 = 1`. Note that the Fibonacci offset is
//! shifted by one from the usual `F_0 = 0, F_1 = 1` (OEIS A000045); use
//! [`fibonacci_standard`] for the latter.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::IntPolynomial;
use crate::{Error, Result};

fn require_positive(n: u64, what: &'static str) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroArgument { what })
    } else {
        Ok(())
    }
}

/// Prime factorisation `[(p, e), ...]` in increasing order of `p`, by trial division.
pub fn factorize(mut n: u64) -> Result<Vec<(u64, u32)>> {
    require_positive(n, "n")?;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    Ok(factors)
}

/// A positive integer together with its complete, strictly increasing divisor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationView {
    pub n: u64,
    pub divisors: Vec<u64>,
}

impl FactorizationView {
    pub fn new(n: u64) -> Result<Self> {
        Ok(FactorizationView {
            n,
            divisors: divisors(n)?,
        })
    }
}

/// All positive divisors of `n`, sorted.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n)? {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

pub fn moebius(n: u64) -> Result<i8> {
    let factors = factorize(n)?;
    if factors.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if factors.len() % 2 == 0 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).is_ok_and(|f| f.len() == 1 && f[0].1 == 1)
}

/// Primes strictly below `bound`, by a sieve.
pub fn primes_below(bound: u64) -> Vec<u64> {
    let bound = bound as usize;
    let mut composite = vec![false; bound.max(2)];
    let mut primes = Vec::new();
    for i in 2..bound {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j < bound {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// `C(n, k)`, extended by zero: the result is 0 whenever `n < 0`, `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(F(n), F(n+1))` under the standard offset `F(0) = 0`, by fast doubling.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n / 2);
    let c = &a * (&b * 2 - &a);
    let d = &a * &a + &b * &b;
    if n % 2 == 0 {
        (c, d)
    } else {
        let next = &c + &d;
        (d, next)
    }
}

/// Fibonacci numbers with `F_0 = F_1 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    fib_pair(n).1
}

/// Fibonacci numbers with the common offset `F_0 = 0, F_1 = 1`.
pub fn fibonacci_standard(n: u64) -> BigInt {
    fib_pair(n).0
}

/// Lucas numbers, `L_0 = 2, L_1 = 1`.
pub fn lucas(n: u64) -> BigInt {
    let (f, f1) = fib_pair(n);
    f1 * 2 - f
}

/// The monic cyclotomic polynomial `Φ_d`, built by exact division:
/// `Φ_d = (x^d - 1) / ∏_{c | d, c < d} Φ_c`.
pub fn cyclotomic(d: u64) -> Result<IntPolynomial> {
    let divs = divisors(d)?;
    let mut built: Vec<(u64, IntPolynomial)> = Vec::with_capacity(divs.len());
    for &e in &divs {
        let mut phi = IntPolynomial::monomial(BigInt::one(), e as usize)
            - IntPolynomial::one();
        for (c, phi_c) in &built {
            if e % c == 0 {
                phi = phi
                    .div_exact(phi_c)
                    .expect("cyclotomic factors divide x^d - 1 exactly");
            }
        }
        built.push((e, phi));
    }
    Ok(built.pop().expect("d has at least one divisor").1)
}

/// `a / b`, asserting that the division is exact.
///
/// Every Burnside-style prefactor in this crate is an exact division; a
/// remainder means the implementation is wrong, so this panics rather than
/// rounding.
pub(crate) fn exact_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "internal error: {a} is not divisible by {b}");
    q
}
