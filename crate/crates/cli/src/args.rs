use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "fractel",
    version,
    about = "Fractional telegraph equations: characteristic functions, densities, simulation and validation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Evaluate E_{α,β}(z) or its derivative.
    Ml(MlArgs),
    /// Characteristic function on a symmetric frequency grid.
    #[command(subcommand)]
    Cf(CfCommand),
    /// Density on an x grid.
    #[command(subcommand)]
    Density(DensityCommand),
    /// Monte-Carlo samples of a process at a fixed time.
    #[command(subcommand)]
    Simulate(SimulateCommand),
    /// Run validation checks and report them as JSON.
    Validate(ValidateArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct MlArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub z_re: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub z_im: f64,
    /// Evaluate d/dz E_{α,β}(z) instead.
    #[arg(long)]
    pub deriv: bool,
}

#[derive(Debug, Args, Serialize, Clone)]
pub struct FreqGrid {
    #[arg(long, default_value_t = 10.0)]
    pub beta_max: f64,
    #[arg(long, default_value_t = 201)]
    pub n_beta: usize,
}

#[derive(Debug, Args, Serialize, Clone)]
pub struct HadamardArgs {
    #[arg(long)]
    pub nu: f64,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, default_value_t = 1.0)]
    pub t0: f64,
    #[arg(long)]
    pub t: f64,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CfCommand {
    /// Hadamard telegraph equation with second space derivative.
    Hadamard {
        #[command(flatten)]
        model: HadamardArgs,
        #[command(flatten)]
        grid: FreqGrid,
        #[arg(long)]
        out: PathBuf,
    },
    /// Hadamard telegraph equation with a Riesz-Feller space derivative.
    SpaceHadamard {
        #[command(flatten)]
        model: HadamardArgs,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        #[command(flatten)]
        grid: FreqGrid,
        #[arg(long)]
        out: PathBuf,
    },
    /// Hilfer telegraph equation, unforced, with f̂1 and f̂2 constant in β.
    Hilfer {
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        delta: f64,
        /// Admit δ ∈ [0, 3/2].
        #[arg(long)]
        extended: bool,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 0.0)]
        omega: f64,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        f1: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        f2: f64,
        #[arg(long, value_enum, default_value_t = Convention::TwoLambda)]
        convention: Convention,
        #[command(flatten)]
        grid: FreqGrid,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    TwoLambda,
    Printed,
}

#[derive(Debug, Args, Serialize, Clone)]
pub struct XGrid {
    #[arg(long, allow_hyphen_values = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x_max: Option<f64>,
    #[arg(long, default_value_t = 401)]
    pub n_x: usize,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityCommand {
    /// Closed-form law of the telegraph process.
    Telegraph {
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        grid: XGrid,
        #[arg(long)]
        out: PathBuf,
    },
    /// Numerical inversion of the Hadamard characteristic function.
    Inverted {
        #[command(flatten)]
        model: HadamardArgs,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        #[command(flatten)]
        grid: XGrid,
        #[arg(long, default_value_t = 1 << 17)]
        max_points: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimulateCommand {
    /// Telegraph process T(t).
    Telegraph {
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// T(|B(ln(t/t0))|), or T(|B(t)|) with --direct.
    BrownianTime {
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        t0: f64,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        direct: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Symmetric stable (CF e^{-scale|β|^α}) or, with --skewed, positive stable
    /// (Laplace transform e^{-scale u^α}, α < 1).
    Stable {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long)]
        skewed: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Inverse time L^ν(t); with --compose-alpha, S^α(c² L^ν(ln(t/t0))).
    InverseTime {
        #[arg(long)]
        nu: f64,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 1e-3)]
        grid_step: f64,
        #[arg(long)]
        compose_alpha: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        t0: f64,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Args, Serialize, Clone)]
pub struct RunArgs {
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct ValidateArgs {
    #[arg(value_enum)]
    pub group: Group,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Write the JSON reports here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Kernels,
    Eigen,
    Mc,
    All,
}
