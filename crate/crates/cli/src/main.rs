//! Batch front end: subdivide complexes, print polynomial tables, count
//! partitions, sweep claims and run the oracle cross-checks.
//!
//! Exit codes: 0 success, 1 a claim or check failed, 2 a capacity limit was
//! hit, 3 bad input.

mod args;
mod checks;
mod output;
mod subdivide;
mod tables;

use std::fmt;
use std::process::ExitCode;

use antiprism_core::Error as CoreError;
use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

/// A claim or oracle check did not hold; the report has been written.
#[derive(Debug)]
pub struct Failed(pub String);

impl fmt::Display for Failed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

const EXIT_FAILED: u8 = 1;
const EXIT_CAPACITY: u8 = 2;
const EXIT_INPUT: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Failed>().is_some() {
        return EXIT_FAILED;
    }
    match err.downcast_ref::<CoreError>() {
        Some(e) if e.is_capacity() => EXIT_CAPACITY,
        Some(CoreError::Integrity(_) | CoreError::Internal(_)) => EXIT_FAILED,
        _ => EXIT_INPUT,
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let g = &cli.global;
    if let Some(jobs) = g.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    match &cli.command {
        Command::Subdivide(a) => subdivide::run(g, a),
        Command::Table(a) => tables::table(g, a),
        Command::Count(a) => tables::count(g, a),
        Command::Verify(a) => checks::run_verify(g, a),
        Command::Crosscheck(a) => checks::crosscheck(g, a),
        Command::Info(a) => checks::info(g, a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INPUT),
            };
        }
    };
    if let Err(msg) = cli.global.validate() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_INPUT);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&anyhow::Error::new(Failed("x".into()))), EXIT_FAILED);
        let cap = CoreError::Capacity {
            what: "n",
            requested: 9,
            limit: 8,
        };
        assert_eq!(exit_code(&cap.into()), EXIT_CAPACITY);
        assert_eq!(
            exit_code(
                &CoreError::Parse {
                    line: 1,
                    message: "x".into()
                }
                .into()
            ),
            EXIT_INPUT
        );
        assert_eq!(exit_code(&CoreError::Internal("x".into()).into()), EXIT_FAILED);
        assert_eq!(exit_code(&anyhow::anyhow!("io")), EXIT_INPUT);
    }
}
