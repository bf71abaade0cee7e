use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semistream::algo::FACTOR_BREAK;

#[derive(Debug, Parser)]
#[command(name = "semistream", version, about = "Two-pass semi-streaming bipartite matching")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the two-pass algorithm on a graph file or a generated hard instance.
    Run(RunArgs),
    /// Generate an instance in the text graph format.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Build, certify, or sample from Ruzsa-Szemerédi constructions.
    #[command(subcommand)]
    Rs(RsCommand),
    /// Print the maximum matching size of a graph file.
    Oracle {
        #[arg(long)]
        input: PathBuf,
    },
    /// Sweep parameters and write CSV.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

/// Parses a sampling probability. Accepts `sqrt2-1` and `2sqrt2-2` besides
/// decimals.
pub fn parse_p(s: &str) -> Result<f64, String> {
    let p = match s {
        "sqrt2-1" => FACTOR_BREAK,
        "2sqrt2-2" => 2.0 * FACTOR_BREAK,
        _ => s.parse::<f64>().map_err(|_| format!("`{s}` is not a number"))?,
    };
    if p > 0.0 && p <= 1.0 {
        Ok(p)
    } else {
        Err(format!("p must lie in (0, 1], got {s}"))
    }
}

fn parse_d(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(d) if d >= 1 => Ok(d),
        _ => Err(format!("d must be a positive integer, got `{s}`")),
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct RunSource {
    /// Graph file in the text format.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Stream the worst-case instance with this N instead of reading a file.
    #[arg(long, value_name = "N")]
    pub hard: Option<u32>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub source: RunSource,
    #[arg(long, default_value = "1", value_parser = parse_d)]
    pub d: u32,
    #[arg(long, default_value = "sqrt2-1", value_parser = parse_p)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip computing μ (no ratio or ε in the report).
    #[arg(long)]
    pub no_oracle: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// The worst-case instance for the augmenting-path pass.
    Hard {
        #[arg(long = "N", visible_alias = "n")]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A planted perfect matching plus random extra edges.
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0.1)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RsCommand {
    /// Build and certify a construction; writes graph.txt and manifest.txt.
    Build {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: PathBuf,
        /// Refuse to build with more vertices per side than this.
        #[arg(long, default_value_t = semistream::rs::DEFAULT_VERTEX_CAP)]
        vertex_cap: u64,
    },
    /// Re-certify a construction written by `rs build`.
    Certify {
        #[arg(long)]
        dir: PathBuf,
    },
    /// Sample a two-party instance from a construction.
    Lambda(LambdaArgs),
}

#[derive(Debug, Args)]
pub struct LambdaArgs {
    /// Directory written by `rs build`.
    #[arg(long, conflicts_with_all = ["m", "k"])]
    pub dir: Option<PathBuf>,
    #[arg(long, requires = "k")]
    pub m: Option<u32>,
    #[arg(long, requires = "m")]
    pub k: Option<u32>,
    /// Overlay a perfect matching through the designated pair, streamed first.
    #[arg(long)]
    pub plus: bool,
    #[arg(long, default_value_t = 0)]
    pub designated: usize,
    /// Edges kept from each matching.
    #[arg(long)]
    pub keep: Option<usize>,
    /// Draw only from the M_I matchings, not their mirrors.
    #[arg(long)]
    pub no_mirrored: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ExperimentCommand {
    /// Predicted factor over a grid of p for each d.
    Analytic {
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3, 4, 5], value_parser = parse_d)]
        d: Vec<u32>,
        /// Grid spacing; p runs over step, 2·step, …, 1.
        #[arg(long, default_value_t = 0.01)]
        p_step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Repeated runs over a (d, p) grid.
    Empirical {
        /// `hard:N`, `planted:N:DENSITY` or `file:PATH`.
        #[arg(long)]
        source: String,
        #[arg(long, value_delimiter = ',', default_values_t = [1], value_parser = parse_d)]
        d: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_values = ["sqrt2-1"], value_parser = parse_p)]
        p: Vec<f64>,
        #[arg(long, default_value_t = 1)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
