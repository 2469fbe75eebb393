//! All complex roots of an integer polynomial by Aberth–Ehrlich iteration.
//!
//! Evaluation runs in a complex float with a separate binary exponent, so
//! polynomials of degree ~1000 with ~300-digit coefficients neither overflow
//! nor lose their small coefficients. Initial guesses sit on circles whose
//! radii come from the Newton polygon of `log |c_i|`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;
use std::f64::consts::TAU;

use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Iteration cap for the simultaneous refinement.
pub const MAX_ITERATIONS: usize = 500;
/// Relative step size below which a root is considered settled.
pub const STEP_TOLERANCE: f64 = 1e-13;

const BIG: f64 = 1.157_920_892_373_162e77; // 2^256
const SMALL: f64 = 8.636_168_555_094_445e-78; // 2^-256

/// `m * 2^e`, with `m` kept away from overflow and underflow.
#[derive(Debug, Clone, Copy)]
struct Scaled {
    m: Complex64,
    e: i64,
}

impl Scaled {
    const ZERO: Scaled = Scaled {
        m: Complex64::new(0.0, 0.0),
        e: 0,
    };

    fn new(m: Complex64, e: i64) -> Self {
        Scaled { m, e }.normalized()
    }

    fn normalized(mut self) -> Self {
        let a = self.m.re.abs().max(self.m.im.abs());
        if a == 0.0 {
            return Scaled::ZERO;
        }
        if !(SMALL..=BIG).contains(&a) {
            let k = a.log2().floor() as i64;
            self.m *= pow2(-k);
            self.e += k;
        }
        self
    }

    fn from_bigint(c: &BigInt) -> Self {
        let bits = c.bits() as i64;
        if bits <= 900 {
            Scaled::new(Complex64::new(c.to_f64().unwrap_or(0.0), 0.0), 0)
        } else {
            let shift = bits - 64;
            let top: BigInt = c >> (shift as usize);
            Scaled::new(Complex64::new(top.to_f64().unwrap_or(0.0), 0.0), shift)
        }
    }

    fn is_zero(&self) -> bool {
        self.m.re == 0.0 && self.m.im == 0.0
    }

    fn mul(self, z: Complex64) -> Self {
        Scaled::new(self.m * z, self.e)
    }

    fn add(self, other: Scaled) -> Self {
        if self.is_zero() {
            return other;
        }
        if other.is_zero() {
            return self;
        }
        let (hi, lo) = if self.e >= other.e { (self, other) } else { (other, self) };
        let d = hi.e - lo.e;
        if d > 1100 {
            return hi;
        }
        Scaled::new(hi.m + lo.m * pow2(-d), hi.e)
    }

    /// `log2 |self|`, `-inf` for zero.
    fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.m.norm().log2() + self.e as f64
        }
    }

    fn div(self, other: Scaled) -> Complex64 {
        (self.m / other.m) * pow2(self.e - other.e)
    }
}

/// `2^k` as an `f64`, saturating to 0 or infinity outside the exponent range.
fn pow2(k: i64) -> f64 {
    2f64.powi(k.clamp(-1100, 1100) as i32)
}

/// Coefficients of a polynomial in extended-exponent form.
struct Prepared {
    coeffs: Vec<Scaled>,
    abs: Vec<Scaled>,
    log2_max: f64,
}

struct Evaluation {
    value: Scaled,
    derivative: Scaled,
    /// `Σ |c_i| |z|^i`, the natural scale for rounding errors in `value`.
    magnitude: Scaled,
}

impl Prepared {
    fn new(coeffs: &[BigInt]) -> Self {
        let coeffs: Vec<Scaled> = coeffs.iter().map(Scaled::from_bigint).collect();
        let abs = coeffs
            .iter()
            .map(|c| Scaled {
                m: Complex64::new(c.m.re.abs(), 0.0),
                e: c.e,
            })
            .collect();
        let log2_max = coeffs
            .iter()
            .map(Scaled::log2_abs)
            .fold(f64::NEG_INFINITY, f64::max);
        Prepared {
            coeffs,
            abs,
            log2_max,
        }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn eval(&self, z: Complex64) -> Evaluation {
        let r = Complex64::new(z.norm(), 0.0);
        let n = self.degree();
        let mut value = self.coeffs[n];
        let mut derivative = Scaled::ZERO;
        let mut magnitude = self.abs[n];
        for i in (0..n).rev() {
            derivative = derivative.mul(z).add(value);
            value = value.mul(z).add(self.coeffs[i]);
            magnitude = magnitude.mul(r).add(self.abs[i]);
        }
        Evaluation {
            value,
            derivative,
            magnitude,
        }
    }

    /// `|p(z)| / (max|c_i| * max(1, |z|)^deg)`.
    fn backward_error(&self, z: Complex64) -> f64 {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return f64::INFINITY;
        }
        let log2_p = self.eval(z).value.log2_abs();
        let log2_scale = self.log2_max + self.degree() as f64 * z.norm().log2().max(0.0);
        (log2_p - log2_scale).exp2()
    }

    /// Starting points on circles read off the upper convex hull of `(i, log2|c_i|)`.
    fn initial_guesses(&self) -> Vec<Complex64> {
        let pts: Vec<(usize, f64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.log2_abs()))
            .collect();
        let mut hull: Vec<(usize, f64)> = Vec::new();
        for &p in &pts {
            while hull.len() >= 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                let cross = (b.0 - a.0) as f64 * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0) as f64;
                if cross >= 0.0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        let n = self.degree();
        let mut guesses = Vec::with_capacity(n);
        for w in hull.windows(2) {
            let (i, j) = (w[0].0, w[1].0);
            let count = j - i;
            let radius = ((w[0].1 - w[1].1) / count as f64).exp2();
            for k in 0..count {
                let angle = TAU * k as f64 / count as f64 + TAU * i as f64 / n as f64 + 0.4;
                guesses.push(Complex64::from_polar(radius, angle));
            }
        }
        guesses
    }
}

/// Roots together with their backward errors, whether or not they converged.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    /// Sorted by `(re, im)`.
    pub roots: Vec<Complex64>,
    /// `|p(r)| / (max|c_i| * max(1, |r|)^deg)` for each root.
    pub backward_errors: Vec<f64>,
    /// Sweeps performed by the iteration.
    pub iterations: usize,
}

impl RootReport {
    /// Indices of roots whose backward error exceeds `tol` or is NaN.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn failed(&self, tol: f64) -> Vec<usize> {
        self.backward_errors
            .iter()
            .enumerate()
            .filter(|(_, &e)| !(e <= tol))
            .map(|(i, _)| i)
            .collect()
    }
}

/// The scaled backward error of `z` as an approximate root of `p`.
pub fn backward_error(p: &IntPolynomial, z: Complex64) -> f64 {
    Prepared::new(p.coeffs()).backward_error(z)
}

/// All `deg p` complex roots of `p`, each with backward error at most `tol`.
///
/// ```
/// use necklace::{roots::roots, IntPolynomial};
/// let r = roots(&IntPolynomial::from_i64s(&[1, 1, 1]), 1e-12).unwrap();
/// assert!((r[0].re + 0.5).abs() < 1e-14);
/// assert!((r[0].im + 3f64.sqrt() / 2.0).abs() < 1e-14);
/// ```
pub fn roots(p: &IntPolynomial, tol: f64) -> Result<Vec<Complex64>> {
    let report = roots_with_report(p)?;
    let failed = report.failed(tol);
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

/// Runs the solver and returns every approximation with its backward error.
///
/// Fails only for constant (including zero) polynomials.
pub fn roots_with_report(p: &IntPolynomial) -> Result<RootReport> {
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        d => {
            return Err(Error::ConstantPolynomial {
                degree: d.unwrap_or(0),
            })
        }
    };
    let zeros_at_origin = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let reduced = &p.coeffs()[zeros_at_origin..];
    let prepared = Prepared::new(reduced);
    let mut found = vec![Complex64::new(0.0, 0.0); zeros_at_origin];
    let mut iterations = 0;
    match reduced.len() - 1 {
        0 => {}
        1 => found.push(-prepared.coeffs[0].div(prepared.coeffs[1])),
        _ => {
            let (z, it) = aberth(&prepared);
            found.extend(z);
            iterations = it;
        }
    }
    found.sort_by(|a, b| match a.re.total_cmp(&b.re) {
        Ordering::Equal => a.im.total_cmp(&b.im),
        o => o,
    });
    let full = Prepared::new(p.coeffs());
    let backward_errors = found.iter().map(|&z| full.backward_error(z)).collect();
    debug_assert_eq!(found.len(), degree);
    Ok(RootReport {
        roots: found,
        backward_errors,
        iterations,
    })
}

/// Further Aberth sweeps over `z` driven by a caller-supplied Newton
/// correction `f(z)/f'(z)`, for polynomials with a better-conditioned closed
/// form than their coefficients. Returns the number of sweeps.
pub fn refine(z: &mut [Complex64], newton: impl Fn(Complex64) -> Complex64) -> usize {
    let n = z.len();
    let mut done = vec![false; n];
    let mut sweeps = 0;
    while sweeps < MAX_ITERATIONS && done.iter().any(|d| !d) {
        sweeps += 1;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let correction = newton(z[i]);
            if !(correction.re.is_finite() && correction.im.is_finite()) || correction.norm() == 0.0 {
                done[i] = true;
                continue;
            }
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i && z[j] != z[i])
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let denom = Complex64::new(1.0, 0.0) - correction * repulsion;
            let step = if denom.norm() == 0.0 { correction } else { correction / denom };
            z[i] -= step;
            if step.norm() <= STEP_TOLERANCE * z[i].norm().max(f64::MIN_POSITIVE) {
                done[i] = true;
            }
        }
    }
    sweeps
}

fn aberth(p: &Prepared) -> (Vec<Complex64>, usize) {
    let n = p.degree();
    let noise = (4.0 * n as f64 * f64::EPSILON).log2();
    let mut z = p.initial_guesses();
    let mut done = vec![false; n];
    let mut sweeps = 0;
    while sweeps < MAX_ITERATIONS && done.iter().any(|d| !d) {
        sweeps += 1;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let ev = p.eval(z[i]);
            if ev.value.is_zero() || ev.value.log2_abs() <= noise + ev.magnitude.log2_abs() {
                done[i] = true;
                continue;
            }
            if ev.derivative.is_zero() {
                continue;
            }
            let newton = ev.value.div(ev.derivative);
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i && z[j] != z[i])
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() == 0.0 { newton } else { newton / denom };
            if !(step.re.is_finite() && step.im.is_finite()) {
                continue;
            }
            z[i] -= step;
            if step.norm() <= STEP_TOLERANCE * z[i].norm() {
                done[i] = true;
            }
        }
    }
    (z, sweeps)
}
