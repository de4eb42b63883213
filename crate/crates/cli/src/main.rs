//! `fibdev` — exact occupation statistics for devices of binary cells that
//! forbid two adjacent occupied cells.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use fibdev_core::{ErrorKind, Topology, DEFAULT_MAX_N};

use commands::{Failure, Observable, Rendered};
use output::OutputFormat;

#[derive(Parser)]
#[command(
    name = "fibdev",
    version,
    about = "Exact occupation statistics for no-adjacent-occupancy devices",
    propagate_version = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Occupation density of one cell, or the whole chain profile.
    Density(DensityArgs),
    /// Pair correlation with its four pattern counts.
    Corr(CorrArgs),
    /// List every admissible state in numeric order.
    States(StatesArgs),
    /// Estimate a density or correlation from seeded uniform draws.
    Sample(SampleArgs),
    /// Check every closed form against brute-force enumeration.
    Verify(VerifyArgs),
}

/// Every device is either a chain or a ring; exactly one must be chosen.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct TopologyFlags {
    /// Chain device: cells 1..=n in a row, with two ends.
    #[arg(long)]
    linear: bool,
    /// Ring device: cell n is also adjacent to cell 1.
    #[arg(long)]
    circular: bool,
}

impl TopologyFlags {
    fn topology(&self) -> Topology {
        if self.circular {
            Topology::Circular
        } else {
            Topology::Linear
        }
    }
}

#[derive(Args)]
struct DensityArgs {
    #[command(flatten)]
    topology: TopologyFlags,
    /// Device length (number of cells).
    #[arg(short)]
    n: usize,
    /// Cell index, 1-based. Omit on a chain for the full profile; ring
    /// densities are cell-independent, so the index is optional there.
    #[arg(short)]
    i: Option<usize>,
}

#[derive(Args)]
struct CorrArgs {
    #[command(flatten)]
    topology: TopologyFlags,
    /// Device length (number of cells).
    #[arg(short)]
    n: usize,
    /// First cell of the pair; on a ring, the cell paired with cell 1.
    #[arg(short)]
    k: usize,
    /// Second cell of the pair (chains only; needs k <= l).
    #[arg(short)]
    l: Option<usize>,
}

#[derive(Args)]
struct StatesArgs {
    #[command(flatten)]
    topology: TopologyFlags,
    /// Device length (number of cells).
    #[arg(short)]
    n: usize,
}

#[derive(Args)]
#[command(group(ArgGroup::new("observable").required(true).args(["i", "pair"])))]
struct SampleArgs {
    #[command(flatten)]
    topology: TopologyFlags,
    /// Device length (number of cells).
    #[arg(short)]
    n: usize,
    /// Estimate the occupation density of this cell.
    #[arg(short)]
    i: Option<usize>,
    /// Estimate the correlation of these two cells.
    #[arg(long, num_args = 2, value_names = ["K", "L"])]
    pair: Option<Vec<usize>>,
    /// Number of draws.
    #[arg(long, default_value_t = 10_000)]
    count: u64,
    /// RNG seed; equal seeds reproduce draws exactly, on any platform.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest device length swept; every family checks lengths up to this.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

fn dispatch(cli: Cli) -> Result<Rendered, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Density(args) => {
            commands::density(format, args.topology.topology(), args.n, args.i)
        }
        Command::Corr(args) => {
            commands::corr(format, args.topology.topology(), args.n, args.k, args.l)
        }
        Command::States(args) => commands::states(format, args.topology.topology(), args.n),
        Command::Sample(args) => {
            let observable = match (args.i, args.pair) {
                (Some(i), None) => Observable::Cell(i),
                (None, Some(pair)) => Observable::Pair(pair[0], pair[1]),
                _ => unreachable!("the argument group admits exactly one observable"),
            };
            commands::sample(
                format,
                args.topology.topology(),
                args.n,
                observable,
                args.count,
                args.seed,
            )
        }
        Command::Verify(args) => commands::verify_sweep(format, args.max_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(rendered) => {
            print!("{}", rendered.text);
            ExitCode::from(rendered.code)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Core(error)) => {
            eprintln!("error: {error}");
            let code = match error.kind() {
                ErrorKind::Domain | ErrorKind::Range => 2,
                ErrorKind::Resource => 3,
            };
            ExitCode::from(code)
        }
    }
}
