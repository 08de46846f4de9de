//! `weyl`: run the identity suites and print sequence tables.
//!
//! Exit status: 0 when every instance passes, 1 on any failure or error,
//! 2 on a configuration error.

mod config;
mod output;
mod tables;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{ConfigError, Format, RunConfig, VerifyArgs};
use weyl_core::run_suites;

#[derive(Debug, Parser)]
#[command(
    name = "weyl",
    version,
    about = "Exact verification of Weyl-algebra identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one suite (or `all`) and report every instance
    Verify(VerifyArgs),
    /// Print E_n(x), E_n(0), B_n and the Euler numbers
    Tables {
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), ConfigError> {
    match path {
        Some(path) => fs::write(path, text)
            .map_err(|e| ConfigError(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| ConfigError(format!("stdout: {e}")))
        }
    }
}

fn verify(cfg: RunConfig) -> Result<bool, ConfigError> {
    let mut reports = run_suites(&cfg.suites, &cfg.suite_config);
    if !cfg.timing {
        reports.iter_mut().for_each(|r| r.elapsed_ms = None);
    }
    let text = match cfg.format {
        Format::Json => output::render_json(&reports),
        Format::Text => output::render_text(&reports, cfg.verbose),
    };
    emit(&text, cfg.output.as_deref())?;
    Ok(reports.iter().all(|r| r.passed()))
}

fn run(cli: Cli) -> Result<bool, ConfigError> {
    match cli.command {
        Command::Verify(args) => verify(args.resolve()?),
        Command::Tables {
            max_n,
            format,
            output,
        } => {
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&tables::tables_json(max_n))
                        .expect("tables serialize");
                    s.push('\n');
                    s
                }
                Format::Text => tables::tables_text(max_n),
            };
            emit(&text, output.as_deref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
