//! Command-line front end for the `grasscal` library: parse queries about
//! Grassmannians, Schubert classes, and the derivation operators; print exact
//! results as text or JSON.

pub mod args;
pub mod commands;
pub mod json;
pub mod parse;
pub mod render;
pub mod verify;

use std::fmt;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Failures the dispatcher maps to exit codes: 2 for malformed input, 3 for
/// well-formed input violating a precondition.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Precondition(grasscal::Error),
}

impl From<grasscal::Error> for CliError {
    fn from(e: grasscal::Error) -> Self {
        CliError::Precondition(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Precondition(e) => write!(f, "{e}"),
        }
    }
}

pub fn run() -> ExitCode {
    run_with(Cli::parse())
}

pub fn run_with(cli: Cli) -> ExitCode {
    let opts = commands::OutputOpts {
        json: cli.json,
        style: render::Style {
            unicode: cli.unicode,
        },
        width: output_width(),
    };

    let result = match &cli.command {
        Command::Pieri(a) => commands::cmd_pieri(a, &opts),
        Command::Product(a) => commands::cmd_product(a, &opts),
        Command::Intersect(a) => commands::cmd_intersect(a, &opts),
        Command::Gw(a) => commands::cmd_gw(a, &opts),
        Command::Giambelli(a) => commands::cmd_giambelli(a, &opts),
        Command::Verify(suite) => match verify::run_verify(suite) {
            Ok((true, report)) => {
                println!("{report}");
                return ExitCode::SUCCESS;
            }
            Ok((false, report)) => {
                println!("{report}");
                return ExitCode::from(1);
            }
            Err(e) => Err(e),
        },
    };

    match result {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Precondition(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

/// Output width for wrapping long sums. `COLUMNS` is the only environment
/// variable honored.
fn output_width() -> Option<usize> {
    std::env::var("COLUMNS")
        .ok()?
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&w| w >= 20)
}
