//! `kmgrowth`: command-line front end for the growth-series engine.

mod commands;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::output::Format;

/// Environment variable naming the default checkpoint directory.
pub const CHECKPOINT_DIR_ENV: &str = "KMGROWTH_CHECKPOINT_DIR";

#[derive(Parser, Debug)]
#[command(name = "kmgrowth", version, about = "Exact Weyl group growth series for Kac-Moody algebras")]
struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    output: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog algebras, or describe one in detail.
    Catalog(CatalogArgs),
    /// Count Weyl group elements of each length.
    Growth(GrowthArgs),
    /// Closed-form Poincare polynomial (finite) or Bott series (affine).
    Poincare(PoincareArgs),
    /// Fit the growth series to P(candidate) / P_N(t).
    Fit(FitArgs),
    /// Recompute every reference result and report pass/fail per item.
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("source").required(true).args(["algebra", "gcm_file"])))]
pub struct AlgebraSource {
    /// Catalog name such as A3, D5, AffA2, HA3.
    #[arg(long)]
    pub algebra: Option<String>,
    /// JSON file {"labels": [...], "matrix": [[...]]}.
    #[arg(long)]
    pub gcm_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("source").args(["algebra", "gcm_file"])))]
pub struct CatalogArgs {
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub gcm_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct EnumerationArgs {
    /// Checkpoint file, written after every level and resumed from when present.
    /// Defaults to a file under $KMGROWTH_CHECKPOINT_DIR when that is set.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Worker threads for level generation.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
    /// Keep every level and fail on any candidate outside levels i and i-2.
    #[arg(long)]
    pub debug_full_dedup: bool,
}

#[derive(Args, Debug, Clone)]
pub struct GrowthArgs {
    #[command(flatten)]
    pub source: AlgebraSource,
    #[arg(long)]
    pub order: usize,
    #[command(flatten)]
    pub enumeration: EnumerationArgs,
}

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("mode").required(true).args(["algebra", "affine"])))]
pub struct PoincareArgs {
    /// Finite algebra whose Poincare polynomial to expand.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Finite algebra whose untwisted affine extension to expand (Bott series).
    #[arg(long, requires = "order")]
    pub affine: Option<String>,
    /// Truncation order for the affine series.
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct FitArgs {
    #[command(flatten)]
    pub source: AlgebraSource,
    /// Finite algebra supplying the numerator P(G).
    #[arg(long)]
    pub candidate: String,
    #[arg(long)]
    pub order: usize,
    /// Trailing zero coefficients required for a polynomial verdict.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub margin: u32,
    #[command(flatten)]
    pub enumeration: EnumerationArgs,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Highest order to enumerate; 12 is a quick mode.
    #[arg(long, default_value_t = 27)]
    pub order: usize,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub margin: u32,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
}

/// Failure with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INVALID_INPUT: u8 = 2;
pub const EXIT_OVERFLOW: u8 = 3;
pub const EXIT_CHECKPOINT: u8 = 4;

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INVALID_INPUT, message: message.into() }
    }
}

impl From<kmgrowth::algebra::AlgebraError> for CliError {
    fn from(e: kmgrowth::algebra::AlgebraError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<kmgrowth::weyl::WeylError> for CliError {
    fn from(e: kmgrowth::weyl::WeylError) -> Self {
        use kmgrowth::weyl::WeylError::*;
        let code = match &e {
            IntegerOverflow => EXIT_OVERFLOW,
            CheckpointVersionMismatch { .. } | CheckpointMismatch { .. } | CheckpointFormat(_) | FullHistoryResume => {
                EXIT_CHECKPOINT
            }
            IndexOutOfRange { .. } | RankMismatch { .. } => EXIT_INVALID_INPUT,
            AdjacencyViolation { .. } | ThreadPool(_) | Io(_) => EXIT_FAILED,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<kmgrowth::series::SeriesError> for CliError {
    fn from(e: kmgrowth::series::SeriesError) -> Self {
        use kmgrowth::series::SeriesError::*;
        let code = match &e {
            Overflow | CoefficientTooLarge(_) => EXIT_OVERFLOW,
            _ => EXIT_INVALID_INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: EXIT_FAILED, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Catalog(args) => commands::cmd_catalog(&args, cli.output),
        Command::Growth(args) => commands::cmd_growth(&args, cli.output),
        Command::Poincare(args) => commands::cmd_poincare(&args, cli.output),
        Command::Fit(args) => commands::cmd_fit(&args, cli.output),
        Command::VerifyPaper(args) => verify::cmd_verify_paper(&args, cli.output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}
