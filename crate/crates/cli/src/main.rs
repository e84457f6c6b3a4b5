//! `nagaolab`: normal forms, homology dimension tables and witness checks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 request outside the supported scope.

mod hdim;
mod nf;
mod output;
mod verify;

use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "nagaolab",
    version,
    about = "Exact computations in SL2 over polynomial rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a matrix or word in SL2(F_p[t]) or E2(Z[t]).
    Nf(nf::NfArgs),
    /// Tables of dim H_i(G, F_p) at a truncation degree.
    Hdim(hdim::HdimArgs),
    /// Verify the witness-matrix identities or search for S(n) witnesses.
    Verify(verify::VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A failed run: exit code and message for stderr.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn failure(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn out_of_scope(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

/// Successful output, possibly with a nonzero exit code when a
/// verification reported failures.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// The argument itself, or all of stdin for `-`.
pub fn read_input(arg: &str) -> Result<String, CliError> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut buf = String::new();
    io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| CliError::usage(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

pub fn render_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Nf(args) => nf::run(args),
        Command::Hdim(args) => hdim::run(args),
        Command::Verify(args) => verify::run(args),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
