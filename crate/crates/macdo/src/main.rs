use std::process::ExitCode;

use clap::Parser;
use macdo::cli::{exit_code, run, Cli, CliError};

fn main() -> ExitCode {
    let result = run(Cli::parse());
    match &result {
        Err(CliError::Usage(msg)) => eprintln!("error: {msg}"),
        Err(CliError::Io(e)) => eprintln!("error: {e}"),
        Ok(_) => {}
    }
    exit_code(&result)
}
