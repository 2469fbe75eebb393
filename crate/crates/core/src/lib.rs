//! Exact counting of broken necklaces and their relatives.
//!
//! The crate is organised bottom-up:
//!
//! * [`numtheory`]: divisors, Euler's totient, Möbius, binomials, Fibonacci and
//!   Lucas numbers, cyclotomic polynomials.
//! * [`poly`], [`series`], [`shape`], [`roots`]: exact univariate polynomials
//!   over big integers, rational power series, unimodality and log-concavity
//!   testers, and an all-roots complex solver.
//! * [`configurations`]: linear configurations (arrays with a medallion),
//!   necklace binomial coefficients, the Losanitsch triangle and necklace
//!   polynomials, each closed form paired with a brute-force enumerator.
//! * [`necklaces`]: circular counts (MacMahon, the supersymmetric
//!   allowed/forbidden split, red-red-free necklaces, Molien series).
//! * [`curve`]: the cubic `v^2 = u^3 - 2u^2 + 2u - 1` carrying the zeros of
//!   every necklace polynomial, with its chord-tangent group law.
//!
//! All counting is exact (`BigInt`/`BigRational`); only the root finder and the
//! curve layer use floating point.

pub mod configurations;
pub mod curve;
mod error;
pub mod necklaces;
pub mod numtheory;
pub mod poly;
pub mod roots;
pub mod series;
pub mod shape;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;
pub use poly::IntPolynomial;
pub use series::RationalFunction;

/// A double-precision complex number, as produced by the root finder.
pub type ComplexPoint = Complex64;
