use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "credence", version, about = "Equilibria of credence-goods markets with a partially credible expert")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand. Each one can also be set in the
/// config file under the same name (dashes become underscores).
#[derive(Debug, Default, Args)]
pub struct GlobalOpts {
    /// TOML file with flat `key = value` entries; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Cost of the minor treatment.
    #[arg(long, global = true)]
    pub c1: Option<f64>,
    /// Cost of the serious treatment.
    #[arg(long, global = true)]
    pub c2: Option<f64>,
    /// Loss from an untreated minor problem.
    #[arg(long, global = true)]
    pub l1: Option<f64>,
    /// Loss from an untreated serious problem.
    #[arg(long, global = true)]
    pub l2: Option<f64>,

    /// Prior probability of the serious problem.
    #[arg(long, global = true)]
    pub q0: Option<f64>,
    /// Probability that the experiment outcome is disclosed truthfully.
    #[arg(long, global = true)]
    pub chi: Option<f64>,
    /// Price of the minor treatment.
    #[arg(long, global = true)]
    pub p1: Option<f64>,
    /// Price of the serious treatment.
    #[arg(long, global = true)]
    pub p2: Option<f64>,

    /// CSV destination (stdout when omitted).
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "CREDENCE_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Equilibrium value and optimal prices.
    Value,
    /// Optimal prices, checked against a brute-force price grid.
    Price {
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Total surplus and client values; adds u* when prices are given.
    Welfare,
    /// Grid over (q0, chi); per-cell equilibrium quantities, or subgame values
    /// when prices are fixed.
    Sweep(SweepArgs),
    /// Data series for plots.
    Figure {
        #[command(subcommand)]
        kind: Figure,
    },
    /// Monte Carlo play of the canonical equilibrium profile.
    Simulate {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check the canonical equilibrium profile.
    Verify {
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Compare closed forms with the grid oracles.
    Oracle {
        #[arg(long)]
        grid: Option<usize>,
    },
}

#[derive(Debug, Default, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub q0_min: Option<f64>,
    #[arg(long)]
    pub q0_max: Option<f64>,
    #[arg(long)]
    pub q0_steps: Option<usize>,
    #[arg(long)]
    pub chi_min: Option<f64>,
    #[arg(long)]
    pub chi_max: Option<f64>,
    #[arg(long)]
    pub chi_steps: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Figure {
    /// ev* over the unit square.
    EvSurface(Steps),
    /// ev* against q0 at fixed chi, with both benchmarks.
    EvSlice(Steps),
    /// Subgame value against chi at fixed q0 and prices.
    PEqValue(Steps),
    /// Client value against q0 at fixed prices.
    UStar(Steps),
    /// ev* and the public-credibility value against q0 at fixed chi.
    PublicCredibility(Steps),
    /// Discriminatory-pricing profit and its envelopes against q0.
    Benchmarks(Steps),
}

#[derive(Debug, Default, Args)]
pub struct Steps {
    /// Grid points per axis.
    #[arg(long)]
    pub steps: Option<usize>,
}
