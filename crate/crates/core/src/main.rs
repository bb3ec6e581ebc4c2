use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use matgrade::cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).context(cli.command.name()) {
        Ok(outcome) => {
            // A closed pipe is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", outcome.report);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
