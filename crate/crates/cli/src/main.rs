use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use necklace_cli::{
    cmd_counts, cmd_curve, cmd_molien, cmd_plot, cmd_poly, cmd_roots, cmd_triangle, cmd_verify, CliError, CliResult,
    Command, RunConfig, VerifyCaps,
};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let target = config
        .out
        .as_ref()
        .map_or_else(|| "<stdout>".to_string(), |p| p.display().to_string());
    match run(config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let e = e.at(&target);
            eprintln!("necklace: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn open_out(config: &RunConfig) -> CliResult<Box<dyn Write>> {
    Ok(match &config.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(config: RunConfig) -> CliResult<()> {
    let mut out = open_out(&config)?;
    let jobs = config.jobs;
    match config.command {
        Command::Triangle { tmax, format } => cmd_triangle(tmax, format, jobs, &mut out)?,
        Command::Counts { n, format } => cmd_counts(n, format, &mut out)?,
        Command::Poly { family, t, format } => cmd_poly(family, t, format, &mut out)?,
        Command::Roots(args) => {
            let outcome = cmd_roots(args.family, args.t, args.tol, jobs, &mut out)?;
            out.flush()?;
            eprintln!("{} roots written", outcome.rows.len());
            if !outcome.failed.is_empty() {
                for (t, i, e) in &outcome.failed {
                    eprintln!("t={t} root {i}: backward error {e:e} exceeds {}", args.tol);
                }
                return Err(CliError::VerifyFailed(outcome.failed.len()));
            }
        }
        Command::Curve { tmax, t, tol } => cmd_curve(tmax, t, tol, &mut out)?,
        Command::Molien { family, k, n } => cmd_molien(family, k, n, &mut out)?,
        Command::Verify { suite, tmax, n, t } => {
            let caps = VerifyCaps { tmax, n, curve_t: t };
            let result = cmd_verify(suite, caps, &mut out);
            out.flush()?;
            result?;
        }
        Command::Plot { input, window } => {
            let path = input.display().to_string();
            let file = File::open(&input).map_err(|e| CliError::Io {
                path: path.clone(),
                message: e.to_string(),
            })?;
            let markers = cmd_plot(file, window, &mut out).map_err(|e| e.at(&path))?;
            eprintln!("{markers} markers");
        }
    }
    out.flush()?;
    Ok(())
}
