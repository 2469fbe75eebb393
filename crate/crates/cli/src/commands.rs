use std::io::Write;

use necklace::configurations::triangle::{triangle_row, write_csv_header, write_csv_row};
use necklace::configurations::{necklace_binomial, necklace_poly};
use necklace::curve::{
    closure_report, necklace_roots_with_report, normalized_residual, octic_check, octic_divisibility_scan,
    point_table_report, root_to_point, POLE_EPS,
};
use necklace::necklaces::{
    allowed, brute_necklaces, forbidden, macmahon, molien_s2, molien_series_zk, molien_zk, no_adjacent_red,
    rowsum_poly, v_poly, w, write_count_rows_csv, CountRow,
};
use necklace::numtheory::cyclotomic;
use necklace::roots::roots_with_report;
use necklace::{BigInt, BigRational, IntPolynomial};
use rayon::prelude::*;

use crate::rootcsv::{write_root_csv, RootRow};
use crate::{
    with_jobs, CliError, CliResult, Format, IndexRange, MolienFamily, PolyFamily, RootFamily, ROOT_DEGREE_MAX,
    TRIANGLE_MAX,
};

/// Rows computed ahead of the writer in `triangle`.
const TRIANGLE_CHUNK: u64 = 64;

/// Streams rows 1..=tmax as `t,k,value` CSV or as
/// `{"tmax":..,"first_row":1,"rows":[[..],..]}` with decimal-string entries.
pub fn cmd_triangle<W: Write>(tmax: u64, format: Format, jobs: usize, out: W) -> CliResult<()> {
    if tmax == 0 || tmax > TRIANGLE_MAX {
        return Err(CliError::Usage(format!("--tmax must be in 1..={TRIANGLE_MAX}")));
    }
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            write_csv_header(&mut w)?;
            for_each_row(tmax, jobs, |t, row| write_csv_row(&mut w, t, row).map_err(CliError::from))?;
            w.flush()?;
        }
        Format::Json => {
            let mut out = std::io::BufWriter::new(out);
            write!(out, "{{\"tmax\":{tmax},\"first_row\":1,\"rows\":[")?;
            for_each_row(tmax, jobs, |t, row| {
                if t > 1 {
                    out.write_all(b",")?;
                }
                let strings: Vec<String> = row.iter().map(BigInt::to_string).collect();
                serde_json::to_writer(&mut out, &strings)?;
                Ok(())
            })?;
            writeln!(out, "]}}")?;
            out.flush()?;
        }
        other => return Err(CliError::Usage(format!("triangle writes csv or json, not {other:?}"))),
    }
    Ok(())
}

fn for_each_row(tmax: u64, jobs: usize, mut sink: impl FnMut(u64, &[BigInt]) -> CliResult<()>) -> CliResult<()> {
    let mut start = 1;
    while start <= tmax {
        let end = (start + TRIANGLE_CHUNK - 1).min(tmax);
        let rows: Vec<Vec<BigInt>> = with_jobs(jobs, || (start..=end).into_par_iter().map(triangle_row).collect())?;
        for (t, row) in (start..=end).zip(&rows) {
            sink(t, row)?;
        }
        start = end + 1;
    }
    Ok(())
}

/// Length below which `counts` cross-checks against enumeration.
pub const COUNTS_BRUTE_MAX: u64 = 20;

pub fn cmd_counts<W: Write>(n: u64, format: Format, mut out: W) -> CliResult<()> {
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    let row = CountRow::new(n)?;
    match format {
        Format::Csv => write_count_rows_csv(&mut out, std::slice::from_ref(&row))?,
        Format::Text => {
            writeln!(out, "n = {n}")?;
            writeln!(out, "macmahon  {}", macmahon(n)?)?;
            writeln!(out, "allowed   {}", allowed(n)?)?;
            writeln!(out, "forbidden {}", forbidden(n)?)?;
            let values: Vec<String> = row.values.iter().map(BigInt::to_string).collect();
            if n <= COUNTS_BRUTE_MAX {
                let len = n as u32;
                let brute_w = brute_necklaces(len, no_adjacent_red)?;
                let brute_k: Vec<String> = (0..=len / 2)
                    .map(|k| brute_necklaces(len, |m, n| no_adjacent_red(m, n) && m.count_ones() == k))
                    .map(|r| r.map(|v| v.to_string()))
                    .collect::<necklace::Result<_>>()?;
                let agree = brute_w == w(n)? && brute_k == values;
                writeln!(out, "W         {} (enumeration {})", w(n)?, brute_w)?;
                writeln!(out, "W_k       {} (enumeration {})", values.join(" "), brute_k.join(" "))?;
                writeln!(out, "oracle    {}", if agree { "agrees" } else { "DISAGREES" })?;
            } else {
                writeln!(out, "W         {}", w(n)?)?;
                writeln!(out, "W_k       {}", values.join(" "))?;
                writeln!(out, "oracle    skipped (n > {COUNTS_BRUTE_MAX})")?;
            }
        }
        other => return Err(CliError::Usage(format!("counts writes text or csv, not {other:?}"))),
    }
    Ok(())
}

pub fn family_poly(family: PolyFamily, t: u32) -> CliResult<IntPolynomial> {
    Ok(match family {
        PolyFamily::Necklace => necklace_poly(t),
        PolyFamily::Rowsum => rowsum_poly(t.into())?,
        PolyFamily::V => v_poly(t.into()),
        PolyFamily::Cyclotomic => cyclotomic(t.into())?,
    })
}

pub fn cmd_poly<W: Write>(family: PolyFamily, t: u32, format: Format, mut out: W) -> CliResult<()> {
    let p = family_poly(family, t)?;
    let var = if family == PolyFamily::Necklace { "y" } else { "x" };
    match format {
        Format::Text => writeln!(out, "{}", p.display_with(var))?,
        Format::Json => {
            let coeffs: Vec<String> = p.coeffs().iter().map(BigInt::to_string).collect();
            serde_json::to_writer(&mut out, &serde_json::json!({ "t": t, "coeffs": coeffs }))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["i", "coeff"])?;
            for (i, c) in p.coeffs().iter().enumerate() {
                w.write_record([i.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
        Format::Svg => return Err(CliError::Usage("poly has no svg output".into())),
    }
    Ok(())
}

/// Roots for every index in a sweep, and the roots that missed `tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootsOutcome {
    pub rows: Vec<RootRow>,
    /// `(t, root index within t, backward error)`.
    pub failed: Vec<(u32, usize, f64)>,
}

fn degree_of(family: RootFamily, t: u32) -> u32 {
    match family {
        RootFamily::Necklace => t,
        RootFamily::Rowsum => t / 2,
    }
}

/// Computes the zeros for each index in `ts` in parallel; rows come back in
/// index order whatever the scheduling.
pub fn compute_roots(family: RootFamily, ts: IndexRange, tol: f64, jobs: usize) -> CliResult<RootsOutcome> {
    if ts.start == 0 {
        return Err(CliError::Usage("--t starts at 1".into()));
    }
    if degree_of(family, ts.end) > ROOT_DEGREE_MAX {
        return Err(CliError::Usage(format!("degree exceeds {ROOT_DEGREE_MAX}")));
    }
    let per_t = with_jobs(jobs, || {
        ts.iter()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|t| roots_for(family, t, tol))
            .collect::<CliResult<Vec<_>>>()
    })??;
    let mut outcome = RootsOutcome { rows: Vec::new(), failed: Vec::new() };
    for (rows, failed) in per_t {
        outcome.rows.extend(rows);
        outcome.failed.extend(failed);
    }
    Ok(outcome)
}

type PerT = (Vec<RootRow>, Vec<(u32, usize, f64)>);

fn roots_for(family: RootFamily, t: u32, tol: f64) -> CliResult<PerT> {
    let report = match family {
        RootFamily::Necklace => necklace_roots_with_report(t)?,
        // F_1 = 1 has no zeros.
        RootFamily::Rowsum if t == 1 => return Ok((Vec::new(), Vec::new())),
        RootFamily::Rowsum => roots_with_report(&rowsum_poly(t.into())?)?,
    };
    let failed = report
        .failed(tol)
        .into_iter()
        .map(|i| (t, i, report.backward_errors[i]))
        .collect();
    let rows = report
        .roots
        .iter()
        .map(|&y| {
            let point = match family {
                RootFamily::Necklace => root_to_point(y, POLE_EPS).ok(),
                RootFamily::Rowsum => None,
            };
            let coords = point.and_then(|p| p.coords().ok());
            RootRow {
                family: family.name().to_string(),
                t,
                root: y,
                u: coords.map(|c| c.0),
                v: coords.map(|c| c.1),
                residual: point.and_then(|p| normalized_residual(&p).ok()),
            }
        })
        .collect();
    Ok((rows, failed))
}

/// Writes the CSV and returns the outcome; roots over `tol` are listed by the
/// caller, not dropped.
pub fn cmd_roots<W: Write>(family: RootFamily, ts: IndexRange, tol: f64, jobs: usize, out: W) -> CliResult<RootsOutcome> {
    let outcome = compute_roots(family, ts, tol, jobs)?;
    write_root_csv(out, &outcome.rows)?;
    Ok(outcome)
}

pub fn cmd_curve<W: Write>(tmax: u32, closure_t: u32, tol: f64, mut out: W) -> CliResult<()> {
    writeln!(out, "# point table")?;
    let table = point_table_report()?;
    write!(out, "{table}")?;
    writeln!(out, "rows within 1e-9 of a computed point: {}", table.matching(1e-9).join(" "))?;
    writeln!(out, "\n# P1 + P7'")?;
    let oc = octic_check()?;
    writeln!(out, "P1 = {}, P7' = {}, sum = {}", oc.p1, oc.p7, oc.sum)?;
    writeln!(out, "w = {:.12} {:+.12}i, normalized octic residual {:.3e}", oc.w.re, oc.w.im, oc.residual)?;
    writeln!(out, "\n# octic divisibility")?;
    let scan = octic_divisibility_scan(tmax)?;
    if scan.dividing.is_empty() {
        writeln!(out, "the octic divides no N_t with t <= {tmax}")?;
    } else {
        writeln!(out, "the octic divides N_t for t in {:?}", scan.dividing)?;
    }
    writeln!(out, "\n# closure")?;
    writeln!(out, "{}", closure_report(closure_t, tol)?)?;
    Ok(())
}

/// `n,coefficient` rows of a Molien series, each cross-checked against a
/// second route; a disagreement is an error.
pub fn cmd_molien<W: Write>(family: MolienFamily, k: u32, terms: usize, out: W) -> CliResult<()> {
    if k == 0 {
        return Err(CliError::Usage("--k must be positive".into()));
    }
    let coeffs: Vec<BigInt> = match family {
        MolienFamily::Zk => {
            let series = molien_series_zk(k.into())?.series_coefficients(terms)?;
            let mut out = Vec::with_capacity(terms);
            for (n, s) in series.iter().enumerate() {
                let exact = molien_zk(n as u64, k.into())?;
                check_route(n, s, &exact)?;
                out.push(exact);
            }
            out
        }
        MolienFamily::S2 => {
            let c = molien_s2(k, terms)?;
            for (i, v) in c.iter().enumerate() {
                let t = i as i64 + 2 * i64::from(k) - 1;
                check_route(i, &BigRational::from_integer(v.clone()), &necklace_binomial(t, 2 * i64::from(k) - 1))?;
            }
            c
        }
    };
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "coefficient"])?;
    for (n, c) in coeffs.iter().enumerate() {
        w.write_record([n.to_string(), c.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

fn check_route(n: usize, series: &BigRational, exact: &BigInt) -> CliResult<()> {
    if *series == BigRational::from_integer(exact.clone()) {
        Ok(())
    } else {
        Err(CliError::Library(necklace::Error::RouteMismatch {
            what: "molien",
            k: 0,
            n: n as i64,
            closed: exact.to_string(),
            recurrence: series.to_string(),
        }))
    }
}
