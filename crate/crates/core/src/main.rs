use std::process::ExitCode;

use clap::Parser;

use cfcolor::cli::{run, Cli, Exit};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Exit::UsageError.code())
        }
    }
}
