use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument that must be positive was zero.
    #[error("{what} must be positive, got 0")]
    ZeroArgument { what: &'static str },

    /// An argument exceeded the size an exhaustive routine accepts.
    #[error("{what} = {value} exceeds the supported maximum {max}")]
    TooLarge {
        what: &'static str,
        value: u64,
        max: u64,
    },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// Polynomial division did not stay in the integers, or left a remainder
    /// where an exact quotient was requested.
    #[error("polynomial division is not exact over the integers")]
    InexactDivision,

    /// Series expansion of a rational function whose denominator vanishes at 0.
    #[error("denominator vanishes at the origin")]
    PoleAtOrigin,

    /// The root finder needs a polynomial of degree at least one.
    #[error("polynomial of degree {degree} has no roots to find")]
    ConstantPolynomial { degree: usize },

    /// Some roots did not meet the backward-error bound within the iteration cap.
    #[error("{} of {total} roots failed the residual bound after {iterations} iterations", failed.len())]
    RootsNotConverged {
        failed: Vec<usize>,
        total: usize,
        iterations: usize,
    },

    /// `1 + Re(y)` is too close to zero for the curve transform.
    #[error("root {re}{im:+}i sits on the pole Re(y) = -1")]
    Pole { re: f64, im: f64 },

    /// Two independent routes to the same quantity disagreed.
    #[error("{what}({k}, {n}): closed form {closed} differs from recurrence {recurrence}")]
    RouteMismatch {
        what: &'static str,
        k: i64,
        n: i64,
        closed: String,
        recurrence: String,
    },

    /// Malformed tabular input.
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    /// A computed point misses the curve by more than the requested tolerance.
    #[error("point ({u}, {v}) has normalized curve residual {residual:e}")]
    OffCurve { u: f64, v: f64, residual: f64 },

    /// Reading or writing an export failed.
    #[error("I/O: {0}")]
    Io(String),

    /// The operation is undefined at the point at infinity.
    #[error("the point at infinity has no affine coordinates")]
    PointAtInfinity,
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        match e.kind() {
            csv::ErrorKind::Io(_) => Error::Io(e.to_string()),
            _ => Error::Parse {
                line: e.position().map_or(0, |p| p.line()),
                message: e.to_string(),
            },
        }
    }
}
