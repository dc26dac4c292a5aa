//! `squap`: validate, reason over, and query software-quality
//! assessment graphs.
//!
//! Exit codes: 0 clean, 1 validation failure (or bad catalog/factor
//! data), 2 parse or I/O failure on an input, 3 usage error.

mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use commands::{Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints --help/--version on stdout and exits cleanly.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(error) => {
            eprintln!("squap: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } => 2,
            CliError::Catalog(_) | CliError::Factor(_) => 1,
            CliError::Usage(_) => 3,
        }
    }
}
