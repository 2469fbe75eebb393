//! The cubic `v^2 = u^3 - 2u^2 + 2u - 1` through the zeros of the necklace
//! polynomials.
//!
//! A zero `y = a + ib` of `N_t` lands on the curve under `u = 1/(1+a)`,
//! `v = b/(1+a)`. Everything here is double precision; the root finder is the
//! ground truth and closed radical forms are only used for display and tests.

use std::fmt;

use num_complex::Complex64;

use crate::configurations::necklace_poly;
use crate::poly::IntPolynomial;
use crate::roots::{backward_error, refine, roots_with_report, RootReport};
use crate::{Error, Result};

/// Default guard on `|1 + Re(y)|`.
pub const POLE_EPS: f64 = 1e-8;

/// Backward-error bound required of every root before it is mapped.
pub const ROOT_TOL: f64 = 1e-12;

/// A point of the curve, or the identity of its group law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvePoint {
    Infinity,
    Affine { u: f64, v: f64 },
}

impl CurvePoint {
    pub fn affine(u: f64, v: f64) -> Self {
        CurvePoint::Affine { u, v }
    }

    pub fn coords(&self) -> Result<(f64, f64)> {
        match *self {
            CurvePoint::Affine { u, v } => Ok((u, v)),
            CurvePoint::Infinity => Err(Error::PointAtInfinity),
        }
    }

    /// Equality up to an absolute tolerance on both coordinates.
    pub fn approx_eq(&self, other: &CurvePoint, tol: f64) -> bool {
        match (self, other) {
            (CurvePoint::Infinity, CurvePoint::Infinity) => true,
            (CurvePoint::Affine { u, v }, CurvePoint::Affine { u: u2, v: v2 }) => {
                (u - u2).abs() <= tol && (v - v2).abs() <= tol
            }
            _ => false,
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { u, v } => write!(f, "({u:.9}, {v:.9})"),
        }
    }
}

/// Maps a polynomial zero to the curve, refusing zeros with `|1 + Re(y)| < eps`.
///
/// ```
/// use necklace::curve::{root_to_point, CurvePoint};
/// use necklace::Complex64;
/// let p = root_to_point(Complex64::new(-0.5, 0.75f64.sqrt()), 1e-8).unwrap();
/// assert!(p.approx_eq(&CurvePoint::affine(2.0, 3f64.sqrt()), 1e-12));
/// ```
pub fn root_to_point(y: Complex64, eps: f64) -> Result<CurvePoint> {
    let d = 1.0 + y.re;
    if d.abs() < eps {
        return Err(Error::Pole { re: y.re, im: y.im });
    }
    Ok(CurvePoint::affine(1.0 / d, y.im / d))
}

fn cubic(u: f64) -> f64 {
    ((u - 2.0) * u + 2.0) * u - 1.0
}

fn cubic_scale(u: f64, v: f64) -> f64 {
    v * v + u.abs().powi(3) + 2.0 * u * u + 2.0 * u.abs() + 1.0
}

/// `v^2 - (u^3 - 2u^2 + 2u - 1)`.
pub fn residual(p: &CurvePoint) -> Result<f64> {
    let (u, v) = p.coords()?;
    Ok(v * v - cubic(u))
}

/// [`residual`] divided by the sum of the absolute values of its terms.
pub fn normalized_residual(p: &CurvePoint) -> Result<f64> {
    let (u, v) = p.coords()?;
    Ok((v * v - cubic(u)).abs() / cubic_scale(u, v))
}

/// `b^2 + a(a^2 + a + 1)/(1 + a)` for `y = a + ib`: the constraint a zero of
/// some `N_t` satisfies before the change of variables.
pub fn curve_constraint_check(y: Complex64) -> f64 {
    let (a, b) = (y.re, y.im);
    b * b + a * (a * a + a + 1.0) / (1.0 + a)
}

/// Whether `-1 - tol <= Re(y) <= tol`, the strip holding every zero of `N_t`.
pub fn in_zero_strip(y: Complex64, tol: f64) -> bool {
    y.re >= -1.0 - tol && y.re <= tol
}

pub fn negate(p: &CurvePoint) -> CurvePoint {
    match *p {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { u, v } => CurvePoint::affine(u, -v),
    }
}

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

/// Chord-and-tangent addition with the point at infinity as identity.
///
/// Abscissae equal to within `1e-12` relative are treated as equal: opposite
/// ordinates give infinity, otherwise the tangent is used.
///
/// ```
/// use necklace::curve::{add, CurvePoint};
/// let p1 = CurvePoint::affine(2.0, -3f64.sqrt());
/// assert!(add(&p1, &p1).approx_eq(&CurvePoint::affine(1.0, 0.0), 1e-12));
/// ```
pub fn add(p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
    let ((x1, y1), (x2, y2)) = match (*p, *q) {
        (CurvePoint::Infinity, _) => return *q,
        (_, CurvePoint::Infinity) => return *p,
        (CurvePoint::Affine { u, v }, CurvePoint::Affine { u: u2, v: v2 }) => ((u, v), (u2, v2)),
    };
    let (lambda, nu) = if same(x1, x2) {
        if same(y1, -y2) || y1 == 0.0 {
            return CurvePoint::Infinity;
        }
        (
            (3.0 * x1 * x1 - 4.0 * x1 + 2.0) / (2.0 * y1),
            (-x1 * x1 * x1 + 2.0 * x1 - 2.0) / (2.0 * y1),
        )
    } else {
        ((y2 - y1) / (x2 - x1), (y1 * x2 - y2 * x1) / (x2 - x1))
    };
    let x3 = lambda * lambda + 2.0 - x1 - x2;
    CurvePoint::affine(x3, -lambda * x3 - nu)
}

/// `(u, v) -> (u - 1, v)`, carrying the curve onto `v^2 = u^3 + u^2 + u`.
pub fn shift_48a4(p: &CurvePoint) -> CurvePoint {
    match *p {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { u, v } => CurvePoint::affine(u - 1.0, v),
    }
}

/// `v^2 - (u^3 + u^2 + u)`.
pub fn residual_48a4(p: &CurvePoint) -> Result<f64> {
    let (u, v) = p.coords()?;
    Ok(v * v - ((u + 1.0) * u + 1.0) * u)
}

/// `g(y)/g'(y)` for `g(y) = (1+y)^{2m} + (1+y^2)^m`, which is `2 N_t` for
/// `t = 2m` and `2 N_t / (1+y)` for `t = 2m+1`. Works with the ratio
/// `((1+y^2)/(1+y)^2)^m` so that large `m` neither overflows nor cancels.
fn newton_correction(m: u32, y: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let (p, q) = (one + y, one + y * y);
    let m = m as f64;
    let log_r = (q / (p * p)).ln() * m;
    let (num, den) = if log_r.re <= 0.0 {
        let r = log_r.exp();
        (one + r, 2.0 * m / p + 2.0 * m * y * r / q)
    } else {
        let s = (-log_r).exp();
        (s + one, 2.0 * m * s / p + 2.0 * m * y / q)
    };
    num / den
}

/// All `t` zeros of `N_t` with their backward errors, sorted by `(re, im)`.
///
/// The coefficient-based solver gives starting values; these are then refined
/// on the two-term form of `N_t`, whose zeros are far better conditioned than
/// its binomial-sized coefficients suggest. For odd `t` the zero `-1` is exact.
pub fn necklace_roots_with_report(t: u32) -> Result<RootReport> {
    if t == 0 {
        return Err(Error::ZeroArgument { what: "t" });
    }
    let p = necklace_poly(t);
    let mut z = roots_with_report(&p)?.roots;
    let minus_one = Complex64::new(-1.0, 0.0);
    if t % 2 == 1 {
        let nearest = (0..z.len())
            .min_by(|&i, &j| (z[i] - minus_one).norm().total_cmp(&(z[j] - minus_one).norm()))
            .expect("odd rows have positive degree");
        z.remove(nearest);
    }
    let iterations = refine(&mut z, |y| newton_correction(t / 2, y));
    if t % 2 == 1 {
        z.push(minus_one);
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let backward_errors = z.iter().map(|&y| backward_error(&p, y)).collect();
    Ok(RootReport {
        roots: z,
        backward_errors,
        iterations,
    })
}

/// As [`necklace_roots_with_report`], failing unless every backward error is
/// at most [`ROOT_TOL`].
pub fn necklace_roots(t: u32) -> Result<Vec<Complex64>> {
    let report = necklace_roots_with_report(t)?;
    let failed = report.failed(ROOT_TOL);
    if failed.is_empty() {
        Ok(report.roots)
    } else {
        Err(Error::RootsNotConverged {
            failed,
            total: report.roots.len(),
            iterations: report.iterations,
        })
    }
}

/// A zero of `N_t` together with its image on the curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NecklacePoint {
    pub t: u32,
    pub root: Complex64,
    pub point: CurvePoint,
    pub residual: f64,
}

impl NecklacePoint {
    pub fn u(&self) -> f64 {
        self.point.coords().map_or(f64::NAN, |c| c.0)
    }

    pub fn v(&self) -> f64 {
        self.point.coords().map_or(f64::NAN, |c| c.1)
    }
}

/// Zeros of `N_t` away from the pole, mapped to the curve and sorted by
/// `(u, v)`. Fails if a zero misses the curve by more than `tol` (normalized).
///
/// ```
/// let pts = necklace::curve::necklace_points(2, 1e-9).unwrap();
/// assert_eq!(pts.len(), 2);
/// assert!((pts[0].u() - 2.0).abs() < 1e-12);
/// ```
pub fn necklace_points(t: u32, tol: f64) -> Result<Vec<NecklacePoint>> {
    if t == 0 {
        return Err(Error::ZeroArgument { what: "t" });
    }
    let zeros = necklace_roots(t)?;
    let mut out = Vec::with_capacity(zeros.len());
    for y in zeros {
        let Ok(point) = root_to_point(y, POLE_EPS) else { continue };
        let residual = normalized_residual(&point)?;
        if residual > tol {
            let (u, v) = point.coords()?;
            return Err(Error::OffCurve { u, v, residual });
        }
        out.push(NecklacePoint { t, root: y, point, residual });
    }
    out.sort_by(|a, b| a.u().total_cmp(&b.u()).then(a.v().total_cmp(&b.v())));
    Ok(out)
}

/// `y^8 - 28y^7 + 1948y^6 - 5236y^5 + 4858y^4 - 3988y^3 + 7156y^2 - 6040y + 2245`.
pub fn octic() -> IntPolynomial {
    IntPolynomial::from_i64s(&[2245, -6040, 7156, -3988, 4858, -5236, 1948, -28, 1])
}

/// The sum of `(2, -sqrt 3)` and the larger-`u`, positive-`v` necklace point of
/// `N_4`, read as a complex number, and how nearly it annihilates [`octic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OcticReport {
    pub p1: CurvePoint,
    pub p7: CurvePoint,
    pub sum: CurvePoint,
    pub w: Complex64,
    /// `|octic(w)| / (max|c| * max(1,|w|)^8)`.
    pub residual: f64,
}

pub fn octic_check() -> Result<OcticReport> {
    let two = necklace_points(2, 1e-9)?;
    let p1 = two
        .iter()
        .find(|p| p.v() < 0.0)
        .expect("N_2 has a zero below the axis")
        .point;
    let four = necklace_points(4, 1e-9)?;
    let p7 = four
        .iter()
        .filter(|p| p.v() > 0.0)
        .max_by(|a, b| a.u().total_cmp(&b.u()))
        .expect("N_4 has zeros above the axis")
        .point;
    let sum = add(&p1, &p7);
    let (x, y) = sum.coords()?;
    let w = Complex64::new(x, y);
    let coeffs: Vec<f64> = octic()
        .coeffs()
        .iter()
        .map(|c| c.to_string().parse().expect("small integers"))
        .collect();
    let value = coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * w + c);
    let max_c = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let residual = value.norm() / (max_c * w.norm().max(1.0).powi(8));
    Ok(OcticReport { p1, p7, sum, w, residual })
}

/// Largest `tmax` accepted by [`octic_divisibility_scan`].
pub const OCTIC_SCAN_MAX: u32 = 1000;

/// Every `t <= tmax` for which [`octic`] divides `N_t` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OcticScan {
    pub tmax: u32,
    pub dividing: Vec<u32>,
}

pub fn octic_divisibility_scan(tmax: u32) -> Result<OcticScan> {
    if tmax > OCTIC_SCAN_MAX {
        return Err(Error::TooLarge {
            what: "tmax",
            value: tmax.into(),
            max: OCTIC_SCAN_MAX.into(),
        });
    }
    let q = octic();
    let dividing = (1..=tmax).filter(|&t| q.divides(&necklace_poly(t))).collect();
    Ok(OcticScan { tmax, dividing })
}

/// One row of the listed point table next to the nearest computed point.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub name: &'static str,
    pub t: u32,
    pub printed: CurvePoint,
    pub nearest: CurvePoint,
    pub distance: f64,
    pub printed_residual: f64,
    /// Distance from the printed point scaled by 1/4 to the nearest computed one.
    pub quarter_distance: f64,
}

/// The listed table rows P1..P10 against direct computation.
#[derive(Debug, Clone, PartialEq)]
pub struct PointTableReport {
    pub rows: Vec<TableRow>,
}

/// The printed table, evaluated from its radicals.
pub fn printed_table() -> Vec<(&'static str, u32, CurvePoint)> {
    let s3 = 3f64.sqrt();
    let s5 = 5f64.sqrt();
    let gamma = (3.0 + 2.0 * s3).sqrt();
    let delta = (s5 - 2.0).sqrt();
    let tau = (24.0 + 14.0 * s3).sqrt();
    let sigma = 2.0 * (2.0 * (11.0 + 5.0 * s5)).sqrt();
    let w1 = 2.0 + s3;
    let w2 = 2.0 * (3.0 + s5);
    let w3 = 3.0 + 2.0 * s3;
    let p = CurvePoint::affine;
    vec![
        ("P1", 2, p(2.0, -s3)),
        ("P2", 2, p(2.0, s3)),
        ("P3", 6, p(w1 - gamma, w3 - tau)),
        ("P4", 6, p(w1 - gamma, -w3 + tau)),
        ("P5", 6, p(w1 + gamma, -w3 - tau)),
        ("P6", 6, p(w1 + gamma, w3 + tau)),
        ("P7", 4, p((1.0 + delta) * w2, w2 + sigma)),
        ("P8", 4, p((1.0 + delta) * w2, -(w2 + sigma))),
        ("P9", 4, p((1.0 - delta) * w2, w2 - sigma)),
        ("P10", 4, p((1.0 - delta) * w2, -(w2 - sigma))),
    ]
}

pub fn point_table_report() -> Result<PointTableReport> {
    let mut rows = Vec::new();
    for (name, t, printed) in printed_table() {
        let (pu, pv) = printed.coords()?;
        let computed: Vec<(f64, f64)> = necklace_points(t, 1e-9)?
            .iter()
            .map(|p| p.point.coords())
            .collect::<Result<_>>()?;
        let closest = |u: f64, v: f64| {
            computed
                .iter()
                .copied()
                .min_by(|a, b| (a.0 - u).hypot(a.1 - v).total_cmp(&(b.0 - u).hypot(b.1 - v)))
                .expect("N_t has zeros off the pole")
        };
        let (nu, nv) = closest(pu, pv);
        let (qu, qv) = closest(pu / 4.0, pv / 4.0);
        rows.push(TableRow {
            name,
            t,
            printed,
            nearest: CurvePoint::affine(nu, nv),
            distance: (nu - pu).hypot(nv - pv),
            printed_residual: normalized_residual(&printed)?,
            quarter_distance: (qu - pu / 4.0).hypot(qv - pv / 4.0),
        });
    }
    Ok(PointTableReport { rows })
}

impl PointTableReport {
    /// Rows whose printed point lies within `tol` of a computed one.
    pub fn matching(&self, tol: f64) -> Vec<&'static str> {
        self.rows.iter().filter(|r| r.distance <= tol).map(|r| r.name).collect()
    }
}

impl fmt::Display for PointTableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name  t  printed  nearest  distance  printed_residual  quarter_distance")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<4} {:>2}  {}  {}  {:.3e}  {:.3e}  {:.3e}",
                r.name, r.t, r.printed, r.nearest, r.distance, r.printed_residual, r.quarter_distance
            )?;
        }
        Ok(())
    }
}

/// Sums `P + Q` of necklace points with `t <= tmax` (including doubles),
/// tallied by whether the sum is again a necklace point with `t <= tmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub tmax: u32,
    pub points: usize,
    pub pairs: usize,
    pub closed: usize,
    pub at_infinity: usize,
}

impl fmt::Display for ClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t <= {}: {} points, {} sums, {} land on a necklace point, {} at infinity, {} elsewhere",
            self.tmax,
            self.points,
            self.pairs,
            self.closed,
            self.at_infinity,
            self.pairs - self.closed - self.at_infinity
        )
    }
}

pub fn closure_report(tmax: u32, tol: f64) -> Result<ClosureReport> {
    let mut catalog: Vec<(f64, f64)> = Vec::new();
    for t in 1..=tmax {
        for p in necklace_points(t, 1e-9)? {
            catalog.push(p.point.coords()?);
        }
    }
    catalog.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    catalog.dedup_by(|a, b| (a.0 - b.0).abs() <= tol && (a.1 - b.1).abs() <= tol);
    let known = |u: f64, v: f64| {
        let start = catalog.partition_point(|c| c.0 < u - tol);
        catalog[start..]
            .iter()
            .take_while(|c| c.0 <= u + tol)
            .any(|c| (c.1 - v).abs() <= tol)
    };
    let (mut pairs, mut closed, mut at_infinity) = (0, 0, 0);
    for i in 0..catalog.len() {
        for j in i..catalog.len() {
            pairs += 1;
            let (a, b) = (catalog[i], catalog[j]);
            match add(&CurvePoint::affine(a.0, a.1), &CurvePoint::affine(b.0, b.1)) {
                CurvePoint::Infinity => at_infinity += 1,
                CurvePoint::Affine { u, v } => {
                    if known(u, v) {
                        closed += 1;
                    }
                }
            }
        }
    }
    Ok(ClosureReport {
        tmax,
        points: catalog.len(),
        pairs,
        closed,
        at_infinity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> f64 {
        3f64.sqrt()
    }

    #[test]
    fn root_to_point_examples() {
        let p = root_to_point(Complex64::new(-0.5, -s3() / 2.0), POLE_EPS).unwrap();
        assert!(p.approx_eq(&CurvePoint::affine(2.0, -s3()), 1e-12));
        assert!(matches!(
            root_to_point(Complex64::new(-1.0, 0.0), POLE_EPS),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residual(&CurvePoint::affine(1.0, 0.0)).unwrap(), 0.0);
        assert!(residual(&CurvePoint::affine(2.0, s3())).unwrap().abs() < 1e-14);
        assert_eq!(residual(&CurvePoint::affine(0.0, 0.0)).unwrap(), 1.0);
        assert_eq!(residual(&CurvePoint::Infinity), Err(Error::PointAtInfinity));
    }

    #[test]
    fn constraint_examples() {
        assert!(curve_constraint_check(Complex64::new(-0.5, s3() / 2.0)).abs() < 1e-15);
        assert_eq!(curve_constraint_check(Complex64::new(0.0, 1.0)), 1.0);
    }

    #[test]
    fn group_law_examples() {
        let p1 = CurvePoint::affine(2.0, -s3());
        assert!(add(&p1, &p1).approx_eq(&CurvePoint::affine(1.0, 0.0), 1e-12));
        assert_eq!(add(&p1, &CurvePoint::Infinity), p1);
        assert_eq!(add(&p1, &negate(&p1)), CurvePoint::Infinity);
        assert_eq!(add(&CurvePoint::affine(1.0, 0.0), &CurvePoint::affine(1.0, 0.0)), CurvePoint::Infinity);
    }

    #[test]
    fn shift_examples() {
        let q = shift_48a4(&CurvePoint::affine(2.0, s3()));
        assert!(q.approx_eq(&CurvePoint::affine(1.0, s3()), 0.0));
        assert!(residual_48a4(&q).unwrap().abs() < 1e-14);
        assert_eq!(residual_48a4(&shift_48a4(&CurvePoint::affine(1.0, 0.0))).unwrap(), 0.0);
        assert_eq!(shift_48a4(&CurvePoint::Infinity), CurvePoint::Infinity);
    }

    #[test]
    fn octic_constant() {
        assert_eq!(octic().eval(&0.into()), 2245.into());
        assert!(!octic().divides(&necklace_poly(8)));
    }

    #[test]
    fn t_one_has_no_points() {
        assert!(necklace_points(1, 1e-9).unwrap().is_empty());
    }
}
