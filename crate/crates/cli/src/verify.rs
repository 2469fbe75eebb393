//! Invariant suites behind `necklace verify`.
//!
//! Each check either passes or names its first counterexample. The suites only
//! assert statements that hold; known-false printed claims live in the
//! acceptance harness, which reports them separately.

use std::fmt;
use std::io::Write;

use clap::ValueEnum;
use necklace::configurations::triangle::triangle_row;
use necklace::configurations::{
    beta, brute_configurations, g, gf_column_check, necklace_binomial, necklace_poly, z, Mode,
};
use necklace::curve::{
    add, in_zero_strip, necklace_points, octic_check, octic_divisibility_scan, point_table_report, residual,
    residual_48a4, shift_48a4, CurvePoint,
};
use necklace::necklaces::{
    allowed, brute_necklaces, classify_susy, diagonal_gf, forbidden, macmahon, molien_s2, no_adjacent_red,
    rowsum_poly, rowsum_poly_by_v, w, w_k, CountRow,
};
use necklace::numtheory::{binomial, cyclotomic, divisors, lucas, primes_below};
use necklace::shape::{is_logconcave, is_unimodal};
use necklace::{BigInt, BigRational, IntPolynomial};
use num_traits::Zero;
use rayon::prelude::*;

use crate::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Oracles,
    Curve,
    All,
}

/// Size caps for the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyCaps {
    /// Identities run over `t, n <= tmax`.
    pub tmax: u64,
    /// Brute-force oracles run over `n <= n`, at most 28.
    pub n: u32,
    /// Curve checks run over `t <= curve_t`.
    pub curve_t: u32,
}

impl Default for VerifyCaps {
    fn default() -> Self {
        VerifyCaps { tmax: 200, n: 14, curve_t: 120 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The first counterexample on failure.
    pub outcome: Result<(), String>,
}

impl Check {
    fn new(name: impl Into<String>, outcome: Result<(), String>) -> Self {
        Check { name: name.into(), outcome }
    }

    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Ok(()) => writeln!(f, "PASS {}", c.name)?,
                Err(e) => writeln!(f, "FAIL {}: {e}", c.name)?,
            }
        }
        writeln!(f, "{} checks, {} failed", self.checks.len(), self.failures())
    }
}

/// Runs `check` over `items`, stopping at the first counterexample.
fn first<I: IntoIterator>(items: I, check: impl Fn(&I::Item) -> Result<(), String>) -> Result<(), String> {
    items.into_iter().try_for_each(|i| check(&i))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn lib<T>(r: necklace::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn identities(tmax: u64) -> Vec<Check> {
    let t_i = tmax as i64;
    vec![
        Check::new(
            format!("symmetry binom_N(t,k) = binom_N(t,t-k), t <= {tmax}"),
            first((0..=t_i).flat_map(|t| (0..=t).map(move |k| (t, k))), |&(t, k)| {
                ensure(necklace_binomial(t, k) == necklace_binomial(t, t - k), || format!("t={t} k={k}"))
            }),
        ),
        Check::new(
            format!("Pascal-type recurrence, t <= {tmax}"),
            first((2..=t_i).flat_map(|t| (0..=t).map(move |k| (t, k))), |&(t, k)| {
                let rhs = necklace_binomial(t - 2, k - 2) + binomial(t - 2, k - 1) + necklace_binomial(t - 2, k);
                ensure(necklace_binomial(t, k) == rhs, || format!("t={t} k={k}"))
            }),
        ),
        Check::new(
            format!("row sums 2^(t-1) + 2^floor((t-1)/2), t <= {tmax}"),
            first(1..=tmax, |&t| {
                let sum: BigInt = triangle_row(t).iter().sum();
                let expected = (BigInt::from(1) << (t - 1) as usize) + (BigInt::from(1) << ((t - 1) / 2) as usize);
                ensure(sum == expected, || format!("t={t}"))
            }),
        ),
        Check::new(
            format!("rows unimodal and log-concave, t <= {tmax}"),
            first(0..=tmax, |&t| {
                let row = triangle_row(t);
                ensure(is_unimodal(&row) && is_logconcave(&row), || format!("t={t}"))
            }),
        ),
        Check::new(
            format!("necklace polynomial coefficients equal triangle rows, t <= {tmax}"),
            first(0..=tmax as u32, |&t| {
                ensure(necklace_poly(t).coeffs() == triangle_row(t.into()).as_slice(), || format!("t={t}"))
            }),
        ),
        Check::new(
            "N_j | N_(mj) for odd m, j even or 1, mj <= 120",
            first(odd_multiple_pairs(120).into_iter().filter(|p| p.0 % 2 == 0 || p.0 == 1), |&(j, m)| {
                ensure(necklace_poly(j).divides(&necklace_poly(m * j)), || format!("j={j} m={m}"))
            }),
        ),
        Check::new(
            format!("allowed + forbidden = necklaces, n <= {tmax}"),
            first(1..=tmax, |&n| {
                ensure(lib(allowed(n))? + lib(forbidden(n))? == lib(macmahon(n))?, || format!("n={n}"))
            }),
        ),
        Check::new(
            format!("sum_k W_k(n) = W(n), n <= {tmax}"),
            first(1..=tmax, |&n| ensure(lib(CountRow::new(n))?.total() == lib(w(n))?, || format!("n={n}"))),
        ),
        Check::new(
            "W_k(3k+1) is Catalan, k <= 40",
            first(0..=40u64, |&k| {
                let c = binomial(2 * k as i64 + 1, k as i64) / BigInt::from(2 * k + 1);
                ensure(lib(w_k(3 * k + 1, k))? == c, || format!("k={k}"))
            }),
        ),
        Check::new(
            format!("row polynomial by W_k equals the V route, n <= {tmax}"),
            first(1..=tmax, |&n| ensure(lib(rowsum_poly(n))? == lib(rowsum_poly_by_v(n))?, || format!("n={n}"))),
        ),
        Check::new(
            "L_p = 1 mod p, p < 1000",
            first(primes_below(1000), |&p| {
                ensure((lucas(p) - 1) % BigInt::from(p) == BigInt::zero(), || format!("p={p}"))
            }),
        ),
        Check::new(
            "L_(p^2) = L_p mod p^2, p <= 31",
            first(primes_below(32), |&p| {
                let m = BigInt::from(p * p);
                ensure((lucas(p * p) - lucas(p)) % &m == BigInt::zero(), || format!("p={p}"))
            }),
        ),
        Check::new(
            format!("product of Phi_d over d | n is x^n - 1, n <= {tmax}"),
            first(1..=tmax, |&n| {
                let mut prod = IntPolynomial::one();
                for d in lib(divisors(n))? {
                    prod = prod * lib(cyclotomic(d))?;
                }
                let target = IntPolynomial::monomial(1.into(), n as usize) - IntPolynomial::one();
                ensure(prod == target, || format!("n={n}"))
            }),
        ),
        Check::new(
            "column generating functions, k <= 20, 60 terms",
            first(0..=20u32, |&k| gf_column_check(k, 60).map_err(|e| format!("k={k}: {e}"))),
        ),
        Check::new(
            "swap Molien series equals binom_N(i+2m-1, 2m-1), m <= 10, 60 terms",
            first(1..=10u32, |&m| {
                let c = lib(molien_s2(m, 60))?;
                first(c.iter().enumerate(), |(i, v)| {
                    let t = *i as i64 + 2 * i64::from(m) - 1;
                    ensure(**v == necklace_binomial(t, 2 * i64::from(m) - 1), || format!("m={m} i={i}"))
                })
            }),
        ),
        Check::new(
            "diagonal generating functions give W_k(n), k <= 20, 2k <= n <= 2k+60",
            first(1..=20u64, |&k| {
                let coeffs = lib(lib(diagonal_gf(k))?.series_coefficients((2 * k + 61) as usize))?;
                first(2 * k..=2 * k + 60, |&n| {
                    let exact = BigRational::from_integer(lib(w_k(n, k))?);
                    ensure(coeffs[n as usize] == exact, || format!("k={k} n={n}"))
                })
            }),
        ),
    ]
}

pub(crate) fn odd_multiple_pairs(limit: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for j in 1..=limit {
        let mut m = 1;
        while m * j <= limit {
            pairs.push((j, m));
            m += 2;
        }
    }
    pairs
}

pub fn oracles(n: u32) -> Vec<Check> {
    let n = n.min(necklace::configurations::brute::MAX_N);
    let pairs: Vec<(u32, u32)> = (0..=n).flat_map(|m| (0..=m).map(move |k| (k, m))).collect();
    let mode_check = |name: &str, mode: Mode, closed: fn(i64, i64) -> BigInt| {
        let bad = pairs
            .par_iter()
            .find_map_first(|&(k, m)| match brute_configurations(k, m, mode) {
                Ok(b) if b == closed(k.into(), m.into()) => None,
                Ok(b) => Some(format!("k={k} n={m}: closed {} enumeration {b}", closed(k.into(), m.into()))),
                Err(e) => Some(e.to_string()),
            });
        Check::new(format!("{name} equals enumeration, 0 <= k <= n <= {n}"), bad.map_or(Ok(()), Err))
    };
    let susy_n = n.min(16);
    let neck_n = n.min(20);
    vec![
        mode_check("g", Mode::NoAdjacent, g),
        mode_check("beta", Mode::MedallionLeft, beta),
        mode_check("Z", Mode::Full, z),
        Check::new(
            format!("sign-shift classification matches the parity counts, n <= {susy_n}"),
            first(1..=susy_n, |&m| {
                let c = lib(classify_susy(m))?;
                let ok = BigInt::from(c.allowed.len()) == lib(allowed(m.into()))?
                    && BigInt::from(c.forbidden.len()) == lib(forbidden(m.into()))?;
                ensure(ok, || format!("n={m}"))
            }),
        ),
        Check::new(
            format!("W and W_k equal enumeration, n <= {neck_n}"),
            first(1..=neck_n, |&m| {
                ensure(lib(brute_necklaces(m, no_adjacent_red))? == lib(w(m.into()))?, || format!("W({m})"))?;
                first(0..=m / 2, |&k| {
                    let b = lib(brute_necklaces(m, |x, len| no_adjacent_red(x, len) && x.count_ones() == k))?;
                    ensure(b == lib(w_k(m.into(), k.into()))?, || format!("W_{k}({m})"))
                })
            }),
        ),
    ]
}

pub fn curve(tmax: u32) -> Vec<Check> {
    let points: Vec<Result<Vec<_>, String>> = (2..=tmax).into_par_iter().map(|t| lib(necklace_points(t, 1e-9))).collect();
    let sqrt3 = 3f64.sqrt();
    let p2 = CurvePoint::affine(2.0, sqrt3);
    let p1 = CurvePoint::affine(2.0, -sqrt3);
    let p3 = necklace::curve::printed_table()[2].2;
    vec![
        Check::new(
            format!("necklace points have normalized residual <= 1e-9 and zeros lie in -1 <= Re y <= 0, 2 <= t <= {tmax}"),
            first((2..=tmax).zip(&points), |(t, pts)| {
                let pts = pts.as_ref().map_err(|e| format!("t={t}: {e}"))?;
                first(pts, |p| {
                    ensure(p.residual <= 1e-9 && in_zero_strip(p.root, 1e-12), || format!("t={t} y={}", p.root))
                })
            }),
        ),
        Check::new(
            "P1 + P1 = (1,0) and 2 P3 = P2 within 1e-8",
            if add(&p1, &p1).approx_eq(&CurvePoint::affine(1.0, 0.0), 1e-8) && add(&p3, &p3).approx_eq(&p2, 1e-8) {
                Ok(())
            } else {
                Err(format!("P1+P1 = {}, 2P3 = {}", add(&p1, &p1), add(&p3, &p3)))
            },
        ),
        Check::new(
            format!("shift to v^2 = u^3 + u^2 + u keeps the residual, t <= {}", tmax.min(60)),
            first((2..=tmax.min(60)).zip(&points), |(t, pts)| {
                first(pts.as_ref().map_err(|e| format!("t={t}: {e}"))?, |p| {
                    let (u, v) = lib(p.point.coords())?;
                    let scale = v * v + u.abs().powi(3) + 2.0 * u * u + 2.0 * u.abs() + 1.0;
                    let d = lib(residual(&p.point))? - lib(residual_48a4(&shift_48a4(&p.point)))?;
                    ensure(d.abs() <= 8.0 * f64::EPSILON * scale, || format!("t={t} {}", p.point))
                })
            }),
        ),
        Check::new(
            "table rows P1..P6 match computed points within 1e-9",
            lib(point_table_report()).and_then(|r| {
                let m = r.matching(1e-9);
                if m == ["P1", "P2", "P3", "P4", "P5", "P6"] {
                    Ok(())
                } else {
                    Err(format!("matching rows {m:?}"))
                }
            }),
        ),
        Check::new(
            "octic residual at P1 + P7' <= 1e-6",
            lib(octic_check()).and_then(|r| if r.residual <= 1e-6 { Ok(()) } else { Err(format!("{:e}", r.residual)) }),
        ),
        Check::new(
            "octic divides no N_t, t <= 300",
            lib(octic_divisibility_scan(300)).and_then(|s| {
                if s.dividing.is_empty() {
                    Ok(())
                } else {
                    Err(format!("t in {:?}", s.dividing))
                }
            }),
        ),
    ]
}

pub fn run_suite(suite: Suite, caps: VerifyCaps) -> VerifyReport {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        checks.extend(identities(caps.tmax));
    }
    if matches!(suite, Suite::Oracles | Suite::All) {
        checks.extend(oracles(caps.n));
    }
    if matches!(suite, Suite::Curve | Suite::All) {
        checks.extend(curve(caps.curve_t));
    }
    VerifyReport { checks }
}

/// Prints the report; fails with [`CliError::VerifyFailed`] iff a line is FAIL.
pub fn cmd_verify<W: Write>(suite: Suite, caps: VerifyCaps, mut out: W) -> CliResult<VerifyReport> {
    if caps.n > necklace::configurations::brute::MAX_N {
        return Err(CliError::Usage(format!("--n is capped at {}", necklace::configurations::brute::MAX_N)));
    }
    let report = run_suite(suite, caps);
    write!(out, "{report}")?;
    match report.failures() {
        0 => Ok(report),
        n => Err(CliError::VerifyFailed(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let r = run_suite(Suite::All, VerifyCaps { tmax: 30, n: 8, curve_t: 12 });
        assert_eq!(r.failures(), 0, "{r}");
        assert!(r.to_string().lines().all(|l| l.starts_with("PASS") || l.contains("checks")));
    }

    #[test]
    fn report_lists_first_counterexample() {
        let r = VerifyReport {
            checks: vec![Check::new("a", Ok(())), Check::new("b", Err("t=3".into()))],
        };
        assert_eq!(r.to_string(), "PASS a\nFAIL b: t=3\n2 checks, 1 failed\n");
    }
}
