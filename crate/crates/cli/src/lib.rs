//! Command-line front end for the `necklace` library.
//!
//! Every subcommand is a plain function writing to a `Write`, so the binary in
//! `main.rs` only parses arguments, opens files and maps errors to exit codes.

pub mod commands;
pub mod plot;
pub mod rootcsv;
pub mod verify;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::{
    cmd_counts, cmd_curve, cmd_molien, cmd_poly, cmd_roots, cmd_triangle, compute_roots, RootsOutcome,
};
pub use plot::{cmd_plot, Window};
pub use rootcsv::{read_root_csv, write_root_csv, RootRow};
pub use verify::{cmd_verify, Check, Suite, VerifyCaps, VerifyReport};

/// Largest `tmax` for `triangle`.
pub const TRIANGLE_MAX: u64 = 5000;
/// Largest polynomial degree handed to the root finder.
pub const ROOT_DEGREE_MAX: u32 = 2000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Library(#[from] necklace::Error),
    #[error("{0} check(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    /// 1 for failed checks or computations, 2 for bad arguments, 3 for I/O.
    pub fn exit_code(&self) -> i32 {
        use necklace::Error as E;
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Library(E::Io(_) | E::Parse { .. }) => 3,
            CliError::Library(E::TooLarge { .. } | E::ZeroArgument { .. }) => 2,
            CliError::Library(_) => 1,
        }
    }

    /// Attaches a path to I/O and parse failures that do not carry one yet.
    pub fn at(self, path: &str) -> Self {
        match self {
            CliError::Library(e @ (necklace::Error::Io(_) | necklace::Error::Parse { .. })) => CliError::Io {
                path: path.to_string(),
                message: e.to_string(),
            },
            other => other,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Library(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Library(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Library(necklace::Error::Io(e.to_string()))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// An inclusive range `a..b` of indices, or a single index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub start: u32,
    pub end: u32,
}

impl IndexRange {
    pub fn single(t: u32) -> Self {
        IndexRange { start: t, end: t }
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> {
        self.start..=self.end
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"));
        let r = match s.split_once("..") {
            Some((a, b)) => IndexRange {
                start: parse(a)?,
                end: parse(b.trim_start_matches('='))?,
            },
            None => IndexRange::single(parse(s)?),
        };
        if r.start > r.end {
            return Err(format!("empty range {s}"));
        }
        Ok(r)
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RootFamily {
    /// Zeros of N_t.
    Necklace,
    /// Zeros of F_n.
    Rowsum,
}

impl RootFamily {
    pub fn name(&self) -> &'static str {
        match self {
            RootFamily::Necklace => "necklace",
            RootFamily::Rowsum => "rowsum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyFamily {
    Necklace,
    Rowsum,
    V,
    Cyclotomic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MolienFamily {
    /// Cyclic group of order k on k variables.
    Zk,
    /// The swap on 2k variables.
    S2,
}

fn positive_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{s:?}: {e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("tolerance must be positive, got {s}"))
    }
}

#[derive(Debug, Parser)]
#[command(name = "necklace", version, about = "Exact necklace counts, polynomials, zeros and curve points")]
pub struct RunConfig {
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rows 1..tmax of the necklace binomial triangle.
    Triangle {
        #[arg(long, default_value_t = 10)]
        tmax: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Necklace counts for one length n.
    Counts {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficients of one polynomial.
    Poly {
        #[arg(long, value_enum, default_value_t = PolyFamily::Necklace)]
        family: PolyFamily,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Complex zeros as CSV: family,t,root_re,root_im,u,v,residual.
    Roots(RootsArgs),
    /// Point table, octic and closure reports for the curve.
    Curve {
        /// Bound for the octic divisibility scan.
        #[arg(long, default_value_t = 300)]
        tmax: u32,
        /// Bound on t for the closure experiment.
        #[arg(long, default_value_t = 12)]
        t: u32,
        #[arg(long, default_value_t = 1e-8, value_parser = positive_tol, allow_hyphen_values = true)]
        tol: f64,
    },
    /// Coefficients of a Molien series.
    Molien {
        #[arg(long, value_enum, default_value_t = MolienFamily::Zk)]
        family: MolienFamily,
        #[arg(long)]
        k: u32,
        /// Number of coefficients.
        #[arg(long, default_value_t = 20)]
        n: usize,
    },
    /// Runs invariant suites and prints PASS/FAIL per check.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Cap on t for the identity suite.
        #[arg(long, default_value_t = 200)]
        tmax: u64,
        /// Cap on n for the brute-force oracles.
        #[arg(long, default_value_t = 14)]
        n: u32,
        /// Cap on t for the curve suite.
        #[arg(long, default_value_t = 120)]
        t: u32,
    },
    /// Scatter plot of a root CSV as SVG.
    Plot {
        #[arg(long = "in")]
        input: PathBuf,
        /// xmin,xmax,ymin,ymax
        #[arg(long, allow_hyphen_values = true)]
        window: Option<Window>,
    },
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[arg(long, value_enum, default_value_t = RootFamily::Necklace)]
    pub family: RootFamily,
    /// Index or inclusive range, e.g. 100 or 3..200.
    #[arg(long)]
    pub t: IndexRange,
    /// Backward-error bound per root.
    #[arg(long, default_value_t = 1e-12, value_parser = positive_tol, allow_hyphen_values = true)]
    pub tol: f64,
}

/// Runs `f` on a pool of `jobs` threads (all cores for 0).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> CliResult<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(pool.install(f))
}
