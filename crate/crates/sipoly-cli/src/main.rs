//! `sipoly`: command-line front end for the polynomial classifier.
//!
//! Every subcommand prints one line of JSON on standard output, or a short
//! human-readable summary with `--pretty`. Exit codes: 0 on success, 2 when
//! the input cannot be read or parsed, 3 when it is well formed but outside
//! the domain of the requested operation.

mod args;
mod commands;
mod error;
mod matrix_spec;
mod sweep;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            println!("{}", if cli.pretty { out.summary } else { out.json });
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
