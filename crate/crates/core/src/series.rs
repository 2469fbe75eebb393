//! Rational functions and their Taylor coefficients at the origin.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// A quotient `num / den` of integer polynomials. The stored form need not be
/// reduced; [`RationalFunction::reduce`] gives the lowest-terms view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    /// Divides numerator and denominator by their gcd, leaving a denominator
    /// with positive leading coefficient.
    pub fn reduce(&self) -> Self {
        let g = IntPolynomial::gcd(&self.num, &self.den);
        let g = if self.den.leading_coeff().is_some_and(|c| c < &BigInt::zero()) {
            -g
        } else {
            g
        };
        if self.num.is_zero() {
            return RationalFunction {
                num: IntPolynomial::zero(),
                den: IntPolynomial::one(),
            };
        }
        RationalFunction {
            num: self.num.div_exact(&g).expect("gcd divides the numerator"),
            den: self.den.div_exact(&g).expect("gcd divides the denominator"),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalFunction {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    /// The first `count` Taylor coefficients at 0, exactly.
    pub fn series_coefficients(&self, count: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let d0 = BigRational::from_integer(d0);
        let den: Vec<BigRational> = self
            .den
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut out: Vec<BigRational> = Vec::with_capacity(count);
        for n in 0..count {
            let mut acc = BigRational::from_integer(self.num.coeff(n));
            for i in 1..den.len().min(n + 1) {
                if !den[i].is_zero() {
                    acc -= &den[i] * &out[n - i];
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }
}

/// A bivariate power series `Σ c[i][j] x^i y^j` truncated to `i, j < order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries2 {
    order: usize,
    coeffs: Vec<Vec<BigRational>>,
}

impl TruncatedSeries2 {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries2 {
            order,
            coeffs: vec![vec![BigRational::zero(); order]; order],
        }
    }

    /// Builds a polynomial from `(i, j, c)` terms meaning `c x^i y^j`.
    pub fn from_terms(order: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut s = Self::zero(order);
        for &(i, j, c) in terms {
            if i < order && j < order {
                s.coeffs[i][j] += BigRational::from_integer(BigInt::from(c));
            }
        }
        s
    }

    pub fn coeff(&self, i: usize, j: usize) -> &BigRational {
        &self.coeffs[i][j]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for i in 0..self.order {
            for j in 0..self.order {
                s.coeffs[i][j] += &other.coeffs[i][j];
            }
        }
        s
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut s = self.clone();
        s.coeffs.iter_mut().flatten().for_each(|a| *a *= c);
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order;
        let mut s = Self::zero(n);
        for a in 0..n {
            for b in 0..n {
                let lhs = &self.coeffs[a][b];
                if lhs.is_zero() {
                    continue;
                }
                for c in 0..n - a {
                    for d in 0..n - b {
                        s.coeffs[a + c][b + d] += lhs * &other.coeffs[c][d];
                    }
                }
            }
        }
        s
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c00 = self.coeffs[0][0].clone();
        if c00.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let n = self.order;
        let mut inv = Self::zero(n);
        for total in 0..(2 * n).saturating_sub(1) {
            for i in 0..n {
                if total < i || total - i >= n {
                    continue;
                }
                let j = total - i;
                let mut acc = if i == 0 && j == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                for a in 0..=i {
                    for b in 0..=j {
                        if a == 0 && b == 0 {
                            continue;
                        }
                        let f = &self.coeffs[a][b];
                        if !f.is_zero() {
                            acc -= f * &inv.coeffs[i - a][j - b];
                        }
                    }
                }
                inv.coeffs[i][j] = acc / &c00;
            }
        }
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn geometric_series() {
        let rf = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(rf.series_coefficients(4).unwrap(), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn necklace_column_two() {
        // 1/((1-x)^2 (1-x^2)); convolution oracle: (k+1) * [parity count].
        let den = &p(&[1, -1]).pow(2) * &p(&[1, 0, -1]);
        let rf = RationalFunction::new(p(&[1]), den).unwrap();
        let oracle: Vec<i64> = (0..7)
            .map(|n: i64| (0..=n).map(|i| if (n - i) % 2 == 0 { i + 1 } else { 0 }).sum())
            .collect();
        assert_eq!(oracle, vec![1, 2, 4, 6, 9, 12, 16]);
        assert_eq!(rf.series_coefficients(7).unwrap(), ints(&oracle));
    }

    #[test]
    fn shifted_fibonacci() {
        let rf = RationalFunction::new(p(&[0, 0, 1]), p(&[1, -1, -1])).unwrap();
        assert_eq!(rf.series_coefficients(6).unwrap(), ints(&[0, 0, 1, 1, 2, 3]));
    }

    #[test]
    fn pole_at_origin_is_rejected() {
        let rf = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        assert_eq!(rf.series_coefficients(3), Err(Error::PoleAtOrigin));
        assert_eq!(
            RationalFunction::new(p(&[1]), IntPolynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn fractional_coefficients() {
        // 1/(2 - x) = 1/2 + x/4 + x^2/8 + ...
        let rf = RationalFunction::new(p(&[1]), p(&[2, -1])).unwrap();
        let coeffs = rf.series_coefficients(3).unwrap();
        let expect: Vec<BigRational> = [2, 4, 8]
            .iter()
            .map(|&d| BigRational::new(BigInt::one(), BigInt::from(d)))
            .collect();
        assert_eq!(coeffs, expect);
    }

    #[test]
    fn reduce_cancels_common_factors() {
        let f = p(&[1, 1, 1]);
        let rf = RationalFunction::new(&f * &p(&[1, 2]), &f * &p(&[-3, 0, 1])).unwrap();
        let r = rf.reduce();
        assert_eq!(r.num, p(&[1, 2]));
        assert_eq!(r.den, p(&[-3, 0, 1]));
        assert_eq!(r.series_coefficients(10).unwrap(), rf.series_coefficients(10).unwrap());
    }

    #[test]
    fn bivariate_inverse_of_one_minus_x_minus_y() {
        // 1/(1 - x - y) = Σ C(i+j, i) x^i y^j.
        let s = TruncatedSeries2::from_terms(6, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)]);
        let inv = s.inverse().unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let c = crate::numtheory::binomial((i + j) as i64, i as i64);
                assert_eq!(inv.coeff(i, j), &BigRational::from_integer(c));
            }
        }
        let one = s.mul(&inv);
        for i in 0..6 {
            for j in 0..6 {
                let expect = if i == 0 && j == 0 { 1 } else { 0 };
                assert_eq!(one.coeff(i, j), &BigRational::from_integer(BigInt::from(expect)));
            }
        }
    }

    proptest! {
        #[test]
        fn polynomial_series_is_its_coefficients(c in prop::collection::vec(-1000i64..1000, 0..20)) {
            let poly = p(&c);
            let rf = RationalFunction::polynomial(poly.clone());
            let got = rf.series_coefficients(25).unwrap();
            for (i, g) in got.iter().enumerate() {
                prop_assert_eq!(g, &BigRational::from_integer(poly.coeff(i)));
            }
        }
    }
}
