//! `photon-lab` command-line front end.

mod args;
mod commands;
mod emit;

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use args::{Cli, Command, Format, ModelCommand};
use emit::{render, Manifest};

const THREADS_ENV: &str = "PHOTON_LAB_THREADS";

/// Bad flag values and unsupported option pairings; exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<photon_lab::Error>() {
        Some(photon_lab::Error::NonConvergence { .. }) => 3,
        Some(_) => 2,
        None => 1,
    }
}

fn options(c: &Command) -> anyhow::Result<Value> {
    Ok(match c {
        Command::Model(m) => serde_json::to_value(&m.command)?,
        other => serde_json::to_value(other)?,
    })
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| UsageError(format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn run(cli: &Cli, argv: &[String]) -> anyhow::Result<u8> {
    configure_threads()?;
    let cmd = &cli.command;
    let (format, out) = cmd.output();
    if format == Format::Csv && matches!(cmd, Command::Model(m) if matches!(m.command, ModelCommand::Ensemble(_))) {
        return Err(UsageError(format!("csv output is not available for `{}`; use --format json", cmd.name())).into());
    }
    let report = commands::dispatch(cmd)?;
    let mut manifest = Manifest::new(
        cmd.name(),
        std::iter::once("photon-lab".to_string()).chain(argv.iter().skip(1).cloned()).collect(),
        options(cmd)?,
    );
    manifest.seed = report.seed;
    manifest.generator = report.generator;
    let text = render(&manifest, &report, format)?;
    match out {
        Some(path) => std::fs::write(path, text.as_bytes())?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    let failed = report.failed();
    if failed.is_empty() {
        Ok(0)
    } else {
        eprintln!("failed checks: {}", failed.join(", "));
        Ok(4)
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli, &argv) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
