//! Command-line front end: argument definitions, dispatch and JSON reports.

pub mod commands;
pub mod error;
pub mod fuzz;
pub mod registry;
pub mod report;

use std::time::Instant;

use clap::Parser;

use crate::commands::{execute, Command, FsLoader};
use crate::error::CliError;
use crate::report::{InputDigest, RunReport, SCHEMA_VERSION, TOOL_VERSION};

pub const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (report schema 1)");

/// Associated primes of powers of monomial ideals and of their sums.
#[derive(Debug, Parser)]
#[command(name = "assprime", version = VERSION)]
pub struct Cli {
    /// Report `timing_ms` as null so output is byte-reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Execute `cli`; `argv` is the echoed command line. Returns the report and whether a check failed.
pub fn run(cli: &Cli, argv: &[String]) -> Result<(RunReport, bool), CliError> {
    let start = Instant::now();
    let mut digest = InputDigest::default();
    for word in argv {
        digest.update(word.as_bytes());
    }
    let mut loader = FsLoader { digest };
    let outcome = execute(&cli.command, &mut loader)?;
    let elapsed = start.elapsed().as_millis() as u64;
    let report = RunReport {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        command: argv.to_vec(),
        inputs_digest: loader.digest.finish(),
        result: outcome.result,
        timing_ms: (!cli.no_timing).then_some(elapsed),
        caveats: outcome.caveats,
    };
    Ok((report, outcome.violation))
}
