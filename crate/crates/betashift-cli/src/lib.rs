//! Library surface of the command-line tool, exposed separately from the
//! binary so integration tests can drive commands in-process and inspect
//! their CSV output.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod svg;
pub mod table;

use std::io::Write;

use cli::{Cli, Command};
use config::{FileConfig, RunConfig};
use error::Result;

/// Dispatch a parsed invocation, writing CSV/report output to `sink`
/// unless the configuration routes it to a file.
pub fn run(cli: &Cli, sink: &mut dyn Write) -> Result<()> {
    let file = FileConfig::resolve(cli.config.as_deref())?;
    let cfg = RunConfig::build(cli.command.job(), &file)?;
    match &cli.command {
        Command::Lambda(_) => commands::cmd_lambda(&cfg, sink),
        Command::DimSweep(_) => commands::cmd_dim_sweep(&cfg, sink),
        Command::Distfn(_) => commands::cmd_distfn(&cfg, sink),
        Command::Takagi(_) => commands::cmd_takagi(&cfg, sink),
        Command::Oracle(_) => commands::cmd_oracle(&cfg, sink),
        Command::Cbeta(_) => commands::cmd_cbeta(&cfg, sink),
        Command::Zeros(_) => commands::cmd_zeros(&cfg, sink),
    }
}

/// Parse arguments (excluding the program name is fine; clap handles both)
/// and run, capturing output in `sink`. Test helper.
pub fn run_from<I, S>(args: I, sink: &mut dyn Write) -> Result<()>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = Cli::try_parse_from(args)
        .map_err(|e| error::CliError::Config(e.to_string()))?;
    run(&cli, sink)
}
