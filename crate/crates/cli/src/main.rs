//! `rqcm`: spectrum tables, wavefunction samples, transforms and
//! verification suites for the relativistic constrained oscillator.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rqcm::minkowski::MassBranch;
use rqcm::transforms::KernelSign;
use rqcm::verify::DerivativeMode;

use config::Format;
use error::{CliError, USAGE_EXIT};

#[derive(Debug, Parser)]
#[command(name = "rqcm", version, about = "Relativistic quantum constraint mechanics toolkit")]
struct Cli {
    /// JSON file with run settings; flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Levels n = 0..=max_n with degeneracy, σ_n and the bound rest mass.
    Spectrum {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = BranchArg::Minus)]
        branch: BranchArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Samples ψ along one grid axis in the chosen frame and representation.
    Eval {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// position, momentum or bargmann.
        #[arg(long)]
        representation: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Numeric Fourier or Segal-Bargmann transform of the position function
    /// next to its closed form.
    Transform {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// momentum or bargmann.
        #[arg(long)]
        representation: Option<String>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        kernel_sign: SignArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Runs a verification suite (or `all`) and writes its JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
struct StateArgs {
    #[arg(long)]
    m1: Option<f64>,
    #[arg(long)]
    m2: Option<f64>,
    /// Spring constant Ω.
    #[arg(long, conflicts_with = "hbar_omega")]
    omega: Option<f64>,
    /// Non-relativistic oscillator frequency ω; sets Ω = m_r ω.
    #[arg(long, value_name = "OMEGA_NR")]
    hbar_omega: Option<f64>,
    /// Quantum numbers, e.g. `1,0,2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    l: Option<Vec<i64>>,
    /// Frame velocity of the bound system, e.g. `0,0,0.6`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    v: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Args)]
struct GridArgs {
    /// xi1..xi3, pi1..pi3, alpha1..alpha3 or x1..x4, p1..p4, a1..a4.
    #[arg(long)]
    axis: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    max: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Debug, Clone, Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
struct VerifyArgs {
    /// invariance, pde, ladder, nr-limit, transforms or all.
    suite: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    vmax: Option<f64>,
    #[arg(long)]
    frame_vmax: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    max_n: Option<u32>,
    #[arg(long)]
    normalization_max_n: Option<u32>,
    /// Quadrature order of the transform suite.
    #[arg(long)]
    order: Option<usize>,
    /// Shifts σ by this multiple of Ω in the PDE residuals.
    #[arg(long, allow_hyphen_values = true)]
    sigma_perturb: Option<f64>,
    #[arg(long, value_enum)]
    kernel_sign: Option<SignArg>,
    #[arg(long, value_enum)]
    pde_mode: Option<ModeArg>,
    /// Per-check tolerance, `check=value`; repeatable.
    #[arg(long, value_name = "CHECK=TOL")]
    tolerance: Vec<String>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for KernelSign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => KernelSign::Plus,
            SignArg::Minus => KernelSign::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

impl From<BranchArg> for MassBranch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Plus => MassBranch::Plus,
            BranchArg::Minus => MassBranch::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Analytic,
    FiniteDifference,
}

impl From<ModeArg> for DerivativeMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Analytic => DerivativeMode::Analytic,
            ModeArg::FiniteDifference => DerivativeMode::FiniteDifference,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("rqcm: {e}");
            ExitCode::from(USAGE_EXIT as u8)
        }
    }
}

pub(crate) type CliResult<T> = Result<T, CliError>;
