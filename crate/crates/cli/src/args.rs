//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use xdiscord::discord::TIGHTNESS_TOL;
use xdiscord::Parity;

#[derive(Debug, Parser)]
#[command(
    name = "xdiscord",
    version,
    about = "Pairwise quantum discord and entanglement of symmetric multi-qubit states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every correlation measure of one state
    Report(ReportArgs),
    /// Write measures along one family parameter to CSV
    Sweep(SweepArgs),
    /// Write min over φ of the conditional entropy on a (parameter, θ) grid to CSV
    Landscape(LandscapeArgs),
    /// Write the data behind one of figures 2 to 8
    Figures(FiguresArgs),
    /// Check the closed-form conditional entropy against the exhaustive search over a family
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Dicke,
    Superposition,
    Scs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Param {
    #[value(name = "N")]
    Qubits,
    #[value(name = "n")]
    Excitation,
    Alpha,
    Delta,
    Eta,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Qubits => "N",
            Param::Excitation => "n",
            Param::Alpha => "alpha",
            Param::Delta => "delta",
            Param::Eta => "eta",
        }
    }

    pub fn is_integer(self) -> bool {
        matches!(self, Param::Qubits | Param::Excitation)
    }
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Number of qubits
    #[arg(long = "N")]
    pub qubits: Option<usize>,
    /// Excitation number
    #[arg(long = "n")]
    pub excitation: Option<usize>,
    /// Superposition angle in [0, π)
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Superposition phase in [0, 2π)
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<f64>,
    /// Coherent state amplitude in [0, 1]
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    /// Coherent state parity
    #[arg(long)]
    pub parity: Option<Parity>,
}

#[derive(Debug, Clone, Args)]
pub struct RangeArgs {
    /// Parameter to vary
    #[arg(long, value_enum)]
    pub over: Param,
    /// First value; defaults to the start of the parameter's range
    #[arg(long, allow_negative_numbers = true)]
    pub from: Option<f64>,
    /// Last value, inclusive
    #[arg(long, allow_negative_numbers = true)]
    pub to: Option<f64>,
    /// Number of points for real parameters
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Output path
    #[arg(long)]
    pub out: PathBuf,
    /// Overwrite an existing file
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Also run the exhaustive measurement search
    #[arg(long)]
    pub verify: bool,
    #[arg(long = "grid-theta", default_value_t = 721)]
    pub grid_theta: usize,
    #[arg(long = "grid-phi", default_value_t = 1440)]
    pub grid_phi: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub range: RangeArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LandscapeArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub range: RangeArgs,
    #[arg(long = "grid-theta", default_value_t = 181)]
    pub grid_theta: usize,
    #[arg(long = "grid-phi", default_value_t = 360)]
    pub grid_phi: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FiguresArgs {
    /// Figure number, 2 to 8
    pub id: u8,
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Overwrite existing files
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long = "grid-theta", default_value_t = 721)]
    pub grid_theta: usize,
    #[arg(long = "grid-phi", default_value_t = 1440)]
    pub grid_phi: usize,
    /// Largest accepted excess of the closed form over the numeric minimum
    #[arg(long, default_value_t = TIGHTNESS_TOL, allow_negative_numbers = true)]
    pub tol: f64,
}
