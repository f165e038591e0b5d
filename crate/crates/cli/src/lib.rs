//! Command-line front end for the profitability kernel.

pub mod commands;
pub mod input;
pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Kernel(#[from] profit_kernel::Error),
}

impl CliError {
    /// 2 for well-formed requests outside a metric's domain or numerically
    /// undecidable, 1 for malformed input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Kernel(profit_kernel::Error::Domain(_) | profit_kernel::Error::Undetermined(_)) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "profit-kernel", version, about = "Project profitability metrics and orderings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Relative tolerance below which an NPV counts as zero.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Flow {
    /// Project file, JSON or CSV.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct Alpha {
    /// Discount function: unit, chi, exp:<r>, compound:<r>, JSON or a JSON file.
    #[arg(long, default_value = "unit")]
    pub alpha: String,
}

#[derive(Debug, Args)]
pub struct Family {
    /// Rate family: exponential, constant_sensitivity:<β>, hyperbolic:<β>, JSON or a JSON file.
    #[arg(long, default_value = "exponential")]
    pub family: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Net present value.
    Npv {
        #[command(flatten)]
        flow: Flow,
        #[command(flatten)]
        alpha: Alpha,
    },
    /// Internal rate of return and acceptance set over a rate family.
    Irr {
        #[command(flatten)]
        flow: Flow,
        #[command(flatten)]
        family: Family,
        /// Also report the supremum of the acceptance set.
        #[arg(long)]
        extended: bool,
    },
    /// Undiscounted payback period.
    Pp {
        #[command(flatten)]
        flow: Flow,
        /// Also report the natural extension of its reciprocal.
        #[arg(long)]
        extended: bool,
    },
    /// Discounted payback period.
    Dpp {
        #[command(flatten)]
        flow: Flow,
        #[command(flatten)]
        alpha: Alpha,
        /// Report the refined pair (τ, λ).
        #[arg(long)]
        refined: bool,
        /// Report τ - 1 + λ (integer transaction times only).
        #[arg(long)]
        star: bool,
        /// Report the payback domain class.
        #[arg(long)]
        classify: bool,
        /// Report the natural extension of the reciprocal payback.
        #[arg(long)]
        extended: bool,
    },
    /// Profitability index.
    Pi {
        #[command(flatten)]
        flow: Flow,
        #[command(flatten)]
        alpha: Alpha,
        /// Also report the undiscounted index extended to all projects.
        #[arg(long)]
        extended: bool,
    },
    /// Ratio index 1 - F(x)/G(x).
    Ri {
        #[command(flatten)]
        flow: Flow,
        /// Numerator functional F.
        #[command(flatten)]
        alpha: Alpha,
        /// Denominator functional G.
        #[arg(long, default_value = "chi")]
        beta: String,
        /// Also report the natural extension.
        #[arg(long)]
        extended: bool,
        /// Comma-separated times for the mixing bounds, starting at 0.
        #[arg(long)]
        grid: Option<String>,
    },
    /// Membership in the distinguished project sets.
    Classify {
        #[command(flatten)]
        flow: Flow,
    },
    /// Compare two projects under a scenario set.
    Compare {
        /// Scenario set JSON file.
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], required = true)]
        inputs: Vec<PathBuf>,
        /// Use the sign preorder instead of acceptance.
        #[arg(long)]
        sign: bool,
        /// Also run the convex-hull test (finite sets).
        #[arg(long)]
        hull: bool,
    },
    /// Usury classification of a lender flow.
    Usury {
        #[command(flatten)]
        flow: Flow,
    },
    /// Every metric, set membership, domain membership and regularity.
    Report {
        #[command(flatten)]
        flow: Flow,
        #[command(flatten)]
        alpha: Alpha,
        #[command(flatten)]
        family: Family,
    },
}

/// Sizes the global thread pool from `PROFIT_KERNEL_THREADS`.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("PROFIT_KERNEL_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| CliError::Input(format!("PROFIT_KERNEL_THREADS: `{v}` is not a positive integer")))?;
    // an already initialized pool keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Runs `cli` and renders its report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    if !(cli.tol > 0.0) || !cli.tol.is_finite() {
        return Err(CliError::Input(format!("--tol must be positive, got {}", cli.tol)));
    }
    let report = commands::execute(&cli.command, cli.tol)?;
    Ok(match cli.format {
        Format::Json => render::json(&report) + "\n",
        Format::Table => render::table(&report),
    })
}
