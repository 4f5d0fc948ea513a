use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Exact graph-polynomial censuses and random-graph checks.
#[derive(Debug, Parser)]
#[command(name = "polymate", version)]
pub struct Cli {
    /// Worker threads; results do not depend on this value.
    #[arg(long, global = true, env = "POLYMATE_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one polynomial of a graph given in graph6.
    Poly {
        #[arg(long)]
        graph: String,
        /// deg | ind | clique | harm | kharm:<k> | pq:<property>
        #[arg(long)]
        which: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Uniqueness statistics over all graphs of one order.
    Census {
        #[command(flatten)]
        target: CensusTarget,
        #[command(flatten)]
        output: Output,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classes of non-isomorphic graphs sharing a polynomial.
    Mates {
        #[command(flatten)]
        target: CensusTarget,
        #[command(flatten)]
        output: Output,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// G(n, p) experiments.
    Random {
        #[arg(long, value_enum)]
        stat: Stat,
        #[arg(long)]
        n: usize,
        /// Edge probability, `a/b` or a decimal.
        #[arg(long, default_value = "1/2")]
        p: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Clique size for the k-extension property.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        output: Output,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write one graph6 line per isomorphism class of order n.
    Gen {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Log10 of the counting ratios behind the uniqueness bounds.
    Bound {
        #[arg(long, value_enum)]
        which: BoundKind,
        #[arg(long)]
        n: usize,
        /// Independence-function divisor for `pq`.
        #[arg(long, default_value_t = 1)]
        a: usize,
        /// Logarithm inside the class cutoff for `pq`.
        #[arg(long, value_enum, default_value_t = Base::E)]
        log_base: Base,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct CensusTarget {
    #[arg(long)]
    n: usize,
    /// deg | ind | clique | harm | kharm:<k> | pq:<property>
    #[arg(long)]
    which: String,
    /// graph6 file to use instead of native enumeration.
    #[arg(long = "in")]
    input: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    AlphaOmega,
    Extension,
    Chernoff,
    HarmFraction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Deg,
    Pq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Base {
    E,
    #[value(name = "2")]
    Two,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("polymate: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
