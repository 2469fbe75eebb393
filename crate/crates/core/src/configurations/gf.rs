//! Generating-function checks for the necklace binomial coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{beta, necklace_binomial};
use crate::numtheory::{fibonacci, fibonacci_standard, lucas};
use crate::poly::IntPolynomial;
use crate::series::{RationalFunction, TruncatedSeries2};

/// Column `k` of the triangle as a rational function in `x`:
/// `((1+x)^a + (1-x)^a) / (2 (1-x)^b (1-x^2)^a)` with `a = floor((k+1)/2)`,
/// `b = ceil((k+1)/2)`.
///
/// Its coefficient of `x^t` is `binom_N(t + k, k)`: the series starts at the
/// first nonzero entry of the column, not at row 0.
pub fn gf_column(k: u32) -> RationalFunction {
    let a = k.div_ceil(2);
    let b = (k + 2) / 2;
    let num = IntPolynomial::binomial_factor(1, 1).pow(a) + IntPolynomial::binomial_factor(1, -1).pow(a);
    let den = IntPolynomial::constant(BigInt::from(2))
        * IntPolynomial::binomial_factor(1, -1).pow(b)
        * IntPolynomial::binomial_factor(2, -1).pow(a);
    RationalFunction { num, den }
}

/// First coefficient where a series and its expected sequence differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub position: usize,
    pub expected: BigInt,
    pub found: BigRational,
}

impl fmt::Display for SeriesMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

/// Compares the first `count` coefficients of [`gf_column`] with
/// `binom_N(t + k, k)`, `t = 0..count`.
pub fn gf_column_check(k: u32, count: usize) -> Result<(), SeriesMismatch> {
    let coeffs = gf_column(k)
        .series_coefficients(count)
        .expect("the denominator is 2 at the origin");
    let k = i64::from(k);
    compare(&coeffs, |t| necklace_binomial(t as i64 + k, k))
}

pub(crate) fn compare(
    coeffs: &[BigRational],
    expected: impl Fn(usize) -> BigInt,
) -> Result<(), SeriesMismatch> {
    for (i, c) in coeffs.iter().enumerate() {
        let e = expected(i);
        if *c != BigRational::from_integer(e.clone()) {
            return Err(SeriesMismatch {
                position: i,
                expected: e,
                found: c.clone(),
            });
        }
    }
    Ok(())
}

/// How a bivariate coefficient `[x^i y^j]` is matched to `binom_N(t, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexConvention {
    /// `t = i`, `k = j`.
    RowColumn,
    /// `t = i + j`, `k = j`: `x` counts unmarked vertices, `y` marked ones.
    UnmarkedMarked,
    /// `t = j`, `k = i`.
    ColumnRow,
}

impl IndexConvention {
    pub const ALL: [IndexConvention; 3] = [
        IndexConvention::RowColumn,
        IndexConvention::UnmarkedMarked,
        IndexConvention::ColumnRow,
    ];

    fn target(self, i: usize, j: usize) -> (i64, i64) {
        let (i, j) = (i as i64, j as i64);
        match self {
            IndexConvention::RowColumn => (i, j),
            IndexConvention::UnmarkedMarked => (i + j, j),
            IndexConvention::ColumnRow => (j, i),
        }
    }

    fn label(self) -> &'static str {
        match self {
            IndexConvention::RowColumn => "x^t y^k",
            IndexConvention::UnmarkedMarked => "x^(t-k) y^k",
            IndexConvention::ColumnRow => "x^k y^t",
        }
    }
}

/// Agreement of one candidate series with the triangle under one convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionAgreement {
    pub candidate: &'static str,
    pub convention: IndexConvention,
    pub agreeing: usize,
    pub total: usize,
    /// `(i, j, expected, found)` for the first disagreeing cell in row-major order.
    pub first_mismatch: Option<(usize, usize, BigInt, BigRational)>,
    /// `agree[i][j]` for the full grid.
    pub grid: Vec<Vec<bool>>,
}

/// Outcome of [`gf_bivariate_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateReport {
    pub tmax: usize,
    pub rows: Vec<ConventionAgreement>,
}

impl BivariateReport {
    /// Whether the derived closed form matches every cell.
    pub fn derived_form_holds(&self) -> bool {
        self.rows
            .iter()
            .filter(|r| r.candidate == DERIVED)
            .all(|r| r.first_mismatch.is_none())
    }
}

const PRINTED: &str = "1/(2(1-x-y)) + (2+x)/(2(1-x^2-y))";
const DERIVED: &str = "1/(2(1-x-xy)) + (1+x+xy)/(2(1-x^2-x^2y^2))";

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn printed_series(order: usize) -> TruncatedSeries2 {
    let first = TruncatedSeries2::from_terms(order, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)])
        .inverse()
        .expect("constant term 1");
    let second = TruncatedSeries2::from_terms(order, &[(0, 0, 1), (2, 0, -1), (0, 1, -1)])
        .inverse()
        .expect("constant term 1")
        .mul(&TruncatedSeries2::from_terms(order, &[(0, 0, 2), (1, 0, 1)]));
    first.add(&second).scale(&half())
}

fn derived_series(order: usize) -> TruncatedSeries2 {
    let first = TruncatedSeries2::from_terms(order, &[(0, 0, 1), (1, 0, -1), (1, 1, -1)])
        .inverse()
        .expect("constant term 1");
    let second = TruncatedSeries2::from_terms(order, &[(0, 0, 1), (2, 0, -1), (2, 2, -1)])
        .inverse()
        .expect("constant term 1")
        .mul(&TruncatedSeries2::from_terms(order, &[(0, 0, 1), (1, 0, 1), (1, 1, 1)]));
    first.add(&second).scale(&half())
}

fn agreement(
    candidate: &'static str,
    series: &TruncatedSeries2,
    convention: IndexConvention,
) -> ConventionAgreement {
    let order = series.order();
    let mut grid = vec![vec![false; order]; order];
    let mut first_mismatch = None;
    let mut agreeing = 0;
    for (i, row) in grid.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let (t, k) = convention.target(i, j);
            let expected = necklace_binomial(t, k);
            let found = series.coeff(i, j);
            *cell = *found == BigRational::from_integer(expected.clone());
            if *cell {
                agreeing += 1;
            } else if first_mismatch.is_none() {
                first_mismatch = Some((i, j, expected, found.clone()));
            }
        }
    }
    ConventionAgreement {
        candidate,
        convention,
        agreeing,
        total: order * order,
        first_mismatch,
        grid,
    }
}

/// Expands the two-variable generating function as commonly stated,
/// `1/(2(1-x-y)) + (2+x)/(2(1-x^2-y))`, and a form derived from the row
/// polynomials, and reports their agreement with the triangle on the grid
/// `0 <= i, j <= tmax` under each [`IndexConvention`].
///
/// Only `tmax <= 12` is accepted, matching the exact-rational grid cost.
pub fn gf_bivariate_check(tmax: usize) -> BivariateReport {
    let tmax = tmax.min(12);
    let order = tmax + 1;
    let printed = printed_series(order);
    let derived = derived_series(order);
    let mut rows: Vec<ConventionAgreement> = IndexConvention::ALL
        .iter()
        .map(|&c| agreement(PRINTED, &printed, c))
        .collect();
    rows.push(agreement(DERIVED, &derived, IndexConvention::RowColumn));
    BivariateReport { tmax, rows }
}

impl fmt::Display for BivariateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bivariate generating function, grid 0..={}", self.tmax)?;
        for r in &self.rows {
            write!(
                f,
                "  {} under {}: {}/{} cells agree",
                r.candidate,
                r.convention.label(),
                r.agreeing,
                r.total
            )?;
            match &r.first_mismatch {
                Some((i, j, e, found)) => {
                    writeln!(f, "; first mismatch at (i={i}, j={j}): expected {e}, found {found}")?
                }
                None => writeln!(f)?,
            }
        }
        Ok(())
    }
}

/// Both sides of `Σ_k β_k(t) = (L_{t+2} + F_{t'})/2 - 1` with
/// `t' = floor(t/2) + 2 + (-1)^(t+1)`, under two Fibonacci offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSumReport {
    pub t: u64,
    pub lhs: BigInt,
    pub t_tilde: u64,
    /// Right side with `F_0 = F_1 = 1`.
    pub rhs_offset_one: BigRational,
    /// Right side with `F_0 = 0, F_1 = 1`.
    pub rhs_offset_zero: BigRational,
}

impl BetaSumReport {
    pub fn holds_offset_one(&self) -> bool {
        BigRational::from_integer(self.lhs.clone()) == self.rhs_offset_one
    }

    pub fn holds_offset_zero(&self) -> bool {
        BigRational::from_integer(self.lhs.clone()) == self.rhs_offset_zero
    }
}

impl fmt::Display for BetaSumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t={}: sum beta = {}; F_0=F_1=1 gives {} ({}); F_0=0,F_1=1 gives {} ({})",
            self.t,
            self.lhs,
            self.rhs_offset_one,
            if self.holds_offset_one() { "equal" } else { "differs" },
            self.rhs_offset_zero,
            if self.holds_offset_zero() { "equal" } else { "differs" },
        )
    }
}

/// Evaluates both sides of the β row-sum identity exactly.
pub fn beta_sum_check(t: u64) -> BetaSumReport {
    let ti = t as i64;
    let lhs: BigInt = (0..=ti).map(|k| beta(k, ti)).sum();
    let t_tilde = if t % 2 == 1 { t / 2 + 3 } else { t / 2 + 1 };
    let side = |fib: BigInt| {
        BigRational::new(lucas(t + 2) + fib, BigInt::from(2)) - BigRational::one()
    };
    BetaSumReport {
        t,
        lhs,
        t_tilde,
        rhs_offset_one: side(fibonacci(t_tilde)),
        rhs_offset_zero: side(fibonacci_standard(t_tilde)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_zero_is_all_ones() {
        assert_eq!(gf_column_check(0, 10), Ok(()));
    }

    #[test]
    fn column_two_matches_table() {
        let coeffs = gf_column(2).series_coefficients(7).unwrap();
        let expect: Vec<BigRational> = [1, 2, 4, 6, 9, 12, 16]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        assert_eq!(coeffs, expect);
    }

    #[test]
    fn column_five_from_table_rows() {
        // Table rows 5..10, column 5: 1, 3, 12, 28, 66, 126.
        let coeffs = gf_column(5).series_coefficients(6).unwrap();
        let expect: Vec<BigRational> = [1, 3, 12, 28, 66, 126]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        assert_eq!(coeffs, expect);
    }

    #[test]
    fn printed_bivariate_origin_cell() {
        let s = printed_series(3);
        // 1/2 from the first term plus 1 from the second.
        assert_eq!(s.coeff(0, 0), &BigRational::new(BigInt::from(3), BigInt::from(2)));
    }

    #[test]
    fn derived_bivariate_form_matches_everywhere() {
        let report = gf_bivariate_check(8);
        assert!(report.derived_form_holds());
        let printed: Vec<_> = report.rows.iter().filter(|r| r.candidate == PRINTED).collect();
        assert_eq!(printed.len(), 3);
        assert!(printed.iter().all(|r| r.first_mismatch.is_some()));
    }

    #[test]
    fn beta_sum_small_cases() {
        let r = beta_sum_check(1);
        assert_eq!(r.lhs, BigInt::from(2));
        assert_eq!(r.t_tilde, 3);
        assert_eq!(r.rhs_offset_one, BigRational::new(BigInt::from(5), BigInt::from(2)));
        assert!(r.holds_offset_zero());
        assert!(!r.holds_offset_one());
    }
}
