//! `dimdatum` — exact dimension-data experiments from one JSON config.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod config;

use commands::{CmdResult, Failure};
use config::{parse_config, JobConfig, OutputFormat};

#[derive(Parser)]
#[command(
    name = "dimdatum",
    about = "Exact dimension data, subgroup-family limits, separating representations, \
             and homogeneous-space spectra for compact Lie groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Path to the JSON job configuration.
    #[arg(long)]
    config: PathBuf,
    /// Override the config's Casimir truncation.
    #[arg(long)]
    truncation: Option<u32>,
    /// Override the config's output format.
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate dim V^H over the truncated enumeration of irreducibles.
    Datum {
        #[command(flatten)]
        common: Common,
        /// Subgroup name from the config (or a parameterless catalog entry).
        #[arg(long)]
        name: String,
    },
    /// Scan a family for stabilization of its dimension data.
    Limit {
        #[command(flatten)]
        common: Common,
        /// Family name from the config.
        #[arg(long)]
        name: String,
    },
    /// Find the first representation separating a nested pair H within H'.
    Separate {
        #[command(flatten)]
        common: Common,
        /// Name of the smaller subgroup.
        sub: String,
        /// Name of the larger subgroup.
        superset: String,
    },
    /// Print the Laplace spectrum of G/H.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        name: String,
    },
    /// Compare the spectra of G/H and G/H' exactly.
    Isospec {
        #[command(flatten)]
        common: Common,
        /// Name of the first subgroup.
        a: String,
        /// Name of the second subgroup.
        b: String,
    },
    /// List catalog subgroups with their validation status.
    Catalog {
        #[command(flatten)]
        common: Common,
    },
}

fn load(common: &Common) -> Result<(JobConfig, u32, OutputFormat), Failure> {
    let source = std::fs::read_to_string(&common.config).map_err(|e| {
        Failure::input(format!(
            "cannot read config {}: {e}",
            common.config.display()
        ))
    })?;
    let config = parse_config(&source).map_err(Failure::input)?;
    let truncation = common.truncation.unwrap_or(config.truncation);
    let format = common.format.unwrap_or(config.output);
    Ok((config, truncation, format))
}

fn dispatch(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Datum { common, name } => {
            let (config, truncation, format) = load(common)?;
            commands::cmd_datum(&config, name, truncation, format)
        }
        Command::Limit { common, name } => {
            let (config, truncation, format) = load(common)?;
            commands::cmd_limit(&config, name, truncation, format)
        }
        Command::Separate {
            common,
            sub,
            superset,
        } => {
            let (config, truncation, format) = load(common)?;
            commands::cmd_separate(&config, sub, superset, truncation, format)
        }
        Command::Spectrum { common, name } => {
            let (config, truncation, format) = load(common)?;
            commands::cmd_spectrum(&config, name, truncation, format)
        }
        Command::Isospec { common, a, b } => {
            let (config, truncation, format) = load(common)?;
            commands::cmd_isospec(&config, a, b, truncation, format)
        }
        Command::Catalog { common } => {
            let (config, _truncation, format) = load(common)?;
            commands::cmd_catalog(&config, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code as u8)
        }
    }
}
