use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "concyc", version, about = "Stationary connecting cycles of concentric circles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find and classify every critical point of the perimeter.
    Critical(CommonArgs),
    /// Closed-form parades with their Hessians.
    Parades(CommonArgs),
    /// Closed-form constructions (Fermat triangle, convex quadrilateral, partially aligned circuits).
    ClosedForm(CommonArgs),
    /// Follow critical points while one radius varies.
    Sweep(SweepArgs),
    /// Run the built-in consistency checks.
    Verify(VerifyArgs),
    /// Report gradient, vertex events and tangential distances for given angles.
    CheckConfig(CheckArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RadiiArgs {
    /// Radii in circuit order, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub radii: Vec<f64>,
    /// A single radius; may be repeated.
    #[arg(long = "radius", allow_negative_numbers = true)]
    pub radius: Vec<f64>,
}

impl RadiiArgs {
    pub fn values(&self) -> Vec<f64> {
        self.radii.iter().chain(&self.radius).copied().collect()
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Multistart grid nodes per angle.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Newton tolerance on the gradient norm (relative to 1 + max radius).
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Also write a full run record as JSON to this file.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Include wall-clock timing in the run record (makes output non-deterministic).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub radii: RadiiArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub radii: RadiiArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Which radius varies (1-based).
    #[arg(long)]
    pub vary: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
    /// Write branch samples as CSV here instead of standard output.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write the events and branch summary as JSON here.
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub radii: RadiiArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// Check the pentagram on five unit circles instead of a catalogue.
    #[arg(long)]
    pub pentagram: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub radii: RadiiArgs,
    /// Angles of vertices 1..n-1 in radians; vertex n sits at angle 0.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub angles: Vec<f64>,
    /// Stationarity tolerance on the gradient norm.
    #[arg(long)]
    pub tol: Option<f64>,
}
