//! The `nilhom` command line, as a library so it can be driven from tests.

pub mod args;
mod commands;
pub mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;

use args::Cli;
use report::{emit_report, CommandReport, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        CliError { code: EXIT_USAGE, message }
    }
}

impl From<nilhom::Error> for CliError {
    fn from(e: nilhom::Error) -> Self {
        use nilhom::Error as E;
        let code = match e {
            E::InvariantViolation(_) | E::FreenessViolation { .. } | E::NonIntegral(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// What a run produced: exit code and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `argv` (including the program name), run, and render the report.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let command = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build() {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: cannot start {} workers: {e}\n", cli.workers),
            }
        }
    };
    let mut report = CommandReport::new(command);
    report.workers = pool.current_num_threads();
    let start = Instant::now();
    let result = pool.install(|| commands::execute(&cli.command, &mut report));
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(()) => {
            let format = if cli.tsv { Format::Tsv } else { Format::Json };
            let code = if report.succeeded() { EXIT_OK } else { EXIT_MISMATCH };
            Outcome {
                code,
                stdout: emit_report(&report, format),
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
        },
    }
}
