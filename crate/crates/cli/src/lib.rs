//! Command-line front end for `quantum-bouncer`: spectra, wavefunction
//! samples, invariant checks and the level-scaling fit, as CSV or JSON.
//!
//! Exit codes: 0 success, 1 a `verify` check failed, 2 bad arguments or
//! config, 3 numerical failure.

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

use config::PhysicalConstants;
use output::OutputRecord;

#[derive(Parser, Debug)]
#[command(name = "bouncer", version)]
#[command(about = "Quantum bouncer: Airy-zero spectrum, eigenstates and checks")]
pub struct Cli {
    /// Physical constants file (`mass`, `g`, `hbar` as `key = value`)
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact and closed-form levels with energies
    Spectrum {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Units::Natural)]
        units: Units,
    },
    /// Sampled eigenfunction phi_n(z) on [0, z_max_factor * turning point]
    Wavefunction {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1001)]
        points: usize,
        #[arg(long, default_value_t = 2.0)]
        z_max_factor: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Units::Natural)]
        units: Units,
    },
    /// Run the invariant checks; exit 1 if any fails
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
    /// Log-log fit of the exact levels against n
    Scaling {
        #[arg(long, default_value_t = 10)]
        n_lo: usize,
        #[arg(long, default_value_t = 200)]
        n_hi: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    /// z0 = 1 and energies in units of m g z0
    Natural,
    /// metres and joules from the physical constants
    Si,
}

impl Units {
    pub fn name(self) -> &'static str {
        match self {
            Units::Natural => "natural",
            Units::Si => "si",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    /// Evaluator, spectrum and scaling checks
    Quick,
    /// Adds the finite-difference oracle and eigenstate checks
    Full,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical {
        op: &'static str,
        source: quantum_bouncer::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Numerical { op, source } => write!(f, "{op} failed: {source}"),
        }
    }
}

impl std::error::Error for CliError {}

/// What a command produced, ready to print.
#[derive(Debug)]
pub enum Report {
    Record(OutputRecord, Format),
    Checks(Vec<verify::Check>),
}

impl Report {
    pub fn render(&self) -> String {
        match self {
            Report::Record(r, Format::Csv) => r.to_csv(),
            Report::Record(r, Format::Json) => r.to_json(),
            Report::Checks(checks) => {
                let passed = checks.iter().filter(|c| c.pass).count();
                let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
                s.push_str(&format!("{passed}/{} checks passed\n", checks.len()));
                s
            }
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Report::Checks(c) if c.iter().any(|c| !c.pass) => 1,
            _ => 0,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let constants = match &cli.config {
        Some(path) => PhysicalConstants::load(path)
            .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))?,
        None => PhysicalConstants::default(),
    };
    Ok(match cli.command {
        Command::Spectrum {
            n_max,
            format,
            units,
        } => Report::Record(commands::spectrum(n_max, units, &constants)?, format),
        Command::Wavefunction {
            n,
            points,
            z_max_factor,
            format,
            units,
        } => Report::Record(
            commands::wavefunction(n, points, z_max_factor, units, &constants)?,
            format,
        ),
        Command::Verify { level } => Report::Checks(verify::run(level)),
        Command::Scaling { n_lo, n_hi, format } => {
            Report::Record(commands::scaling(n_lo, n_hi)?, format)
        }
    })
}
