//! `fsz`: orders, classes, FSZ tests, raw counts and witness search for
//! permutation groups given by catalog spec or generator file.

mod args;
mod commands;
mod error;
mod report;
mod source;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, Format};
use error::CliError;
use report::{ErrorBody, ErrorReport, Render, EXIT_FSZ};

fn emit<R: Serialize + Render>(format: Format, report: &R) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, report).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Text => out.write_all(report.text().as_bytes())?,
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let format = cli.run.format;
    match &cli.command {
        Command::Info { group } => {
            emit(format, &commands::info(group, &cli.run)?)?;
            Ok(EXIT_FSZ)
        }
        Command::Test(args) => {
            let report = commands::test(args, &cli.run)?;
            emit(format, &report)?;
            Ok(report.exit_code())
        }
        Command::Counts(args) => {
            emit(format, &commands::counts(args, &cli.run)?)?;
            Ok(EXIT_FSZ)
        }
        Command::Witness(args) => {
            let report = commands::witness(args, &cli.run)?;
            emit(format, &report)?;
            Ok(report.exit_code())
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::Test(_) => "test",
        Command::Counts(_) => "counts",
        Command::Witness(_) => "witness",
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("FSZ_LOG")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = e.exit_code();
            match cli.run.format {
                Format::Json => {
                    let report = ErrorReport {
                        command: command_name(&cli.command),
                        error: ErrorBody {
                            kind: e.kind(),
                            message: e.to_string(),
                            exit_code: code,
                        },
                    };
                    let text = serde_json::to_string_pretty(&report).expect("plain data");
                    println!("{text}");
                }
                Format::Text => eprintln!("fsz: {e}"),
            }
            ExitCode::from(code)
        }
    }
}
