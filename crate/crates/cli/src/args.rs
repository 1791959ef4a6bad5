use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hsbound",
    version,
    about = "Sharp bounds on |median - mean| / sd"
)]
pub struct Cli {
    /// Emit a structured (JSON) report instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Standard-deviation divisor. Only `stats` accepts `n-1`.
    #[arg(long, global = true, value_enum, default_value = "n")]
    pub divisor: DivisorArg,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DivisorArg {
    #[value(name = "n")]
    N,
    #[value(name = "n-1")]
    NMinusOne,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mean, sd, median, skewness ratio and deviation chain of a dataset.
    Stats(InputArgs),
    /// Compare a dataset's skewness ratio with the classical and sharp bounds.
    Check(InputArgs),
    /// Generate an extremal dataset attaining the sharp bound.
    Extremal(ExtremalArgs),
    /// Brute-force the two-block family for every n in a range.
    Sweep(SweepArgs),
    /// Randomized maximization of |median - mean| / sd.
    Optimize(OptimizeArgs),
    /// Majindar's bound and the comparison lemma for a probability split.
    Prob(ProbArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Data file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: usize,
    /// +1 for median above mean, -1 for median below.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub sign: i64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub location: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub scale: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub nmin: usize,
    #[arg(long)]
    pub nmax: usize,
}

#[derive(Debug, Clone, Args)]
pub struct OptimizeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 200)]
    pub restarts: usize,
    #[arg(long, default_value_t = 2000)]
    pub iters: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct ProbArgs {
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub q: f64,
}
