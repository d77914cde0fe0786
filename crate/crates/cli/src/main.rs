use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knot_model::Database;
use torvar::commands::{self, Settings, DEFAULT_PUISEUX_ORDER};
use torvar::{CliError, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact SL2 character varieties and Reidemeister torsion forms of
/// two-bridge knots.
#[derive(Parser, Debug)]
#[command(name = "torvar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory of knot records (default: the bundled `data/`).
    #[arg(long, global = true)]
    data: Option<PathBuf>,
    /// Truncation order: the expansion order for `puiseux`, the starting
    /// precision elsewhere.
    #[arg(long, global = true)]
    order: Option<i64>,
    /// Seed for sample points and random words.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Number of sample points for Cayley checks.
    #[arg(long, default_value_t = 5, global = true)]
    samples: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: curve, genera, divisor and both vanishing theorems.
    Analyze { knot: String },
    /// Puiseux expansions at a labelled place.
    Puiseux { knot: String, label: String },
    /// The divisor of the torsion form, with a Cayley cross-check.
    TorsionDivisor { knot: String },
    /// Alexander polynomial, Fox identity and reducible characters.
    Alexander { knot: String },
    /// Predicted against computed orders at finite and ideal places.
    CheckTheorems { knot: String },
    /// Golden values against fresh computations.
    Goldens {
        /// Restrict to one group (name or criterion number).
        #[arg(long)]
        only: Option<String>,
    },
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let db = cli.data.clone().map_or_else(Database::bundled, Database::new);
    let settings = Settings { db, order: cli.order, seed: cli.seed, samples: cli.samples };
    match &cli.command {
        Command::Analyze { knot } => commands::analyze(&settings, knot),
        Command::Puiseux { knot, label } => {
            let order = cli.order.unwrap_or(DEFAULT_PUISEUX_ORDER);
            let settings = Settings { order: None, ..settings };
            commands::puiseux(&settings, knot, label, order)
        }
        Command::TorsionDivisor { knot } => commands::torsion_divisor(&settings, knot),
        Command::Alexander { knot } => commands::alexander(&settings, knot),
        Command::CheckTheorems { knot } => commands::check_theorems(&settings, knot),
        Command::Goldens { only } => commands::run_goldens(&settings, only.as_deref()),
    }
}

fn emit(cli: &Cli, out: &Output) -> Result<(), CliError> {
    let body = match cli.format {
        Format::Text => out.text.clone(),
        Format::Json => serde_json::to_string_pretty(&out.json).expect("JSON values serialize") + "\n",
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, body).map_err(|source| CliError::Io { path: path.display().to_string(), source })
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|out| emit(&cli, &out).map(|_| out));
    match result {
        Ok(out) if out.violations.is_empty() => ExitCode::SUCCESS,
        Ok(out) => {
            for v in &out.violations {
                eprintln!("violation: {v}");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
