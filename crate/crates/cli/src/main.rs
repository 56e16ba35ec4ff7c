use std::io::Write;
use std::process::ExitCode;

use assprime_cli::error::EXIT_VIOLATION;
use assprime_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    // the timing switch does not change results, so it is left out of the echo and digest
    let argv: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| a != "--no-timing")
        .collect();
    match run(&cli, &argv) {
        Ok((report, violation)) => {
            let text = serde_json::to_string_pretty(&report).expect("serializable");
            // a closed pipe is not an error for a report writer
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if violation {
                eprintln!("error: a theorem-backed check failed; this is a bug");
                ExitCode::from(EXIT_VIOLATION as u8)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
