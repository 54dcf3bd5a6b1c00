//! `raoseq`: graphicality checks, realizations and the induced-subgraph order
//! on degree sequences from the command line.
//!
//! Exit codes: 0 success / order holds, 1 negative verdict, 2 usage, input
//! or configuration error.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "raoseq",
    version,
    about = "Degree sequences and the induced-subgraph order"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Drop zero entries before validating sequences.
    #[arg(long, global = true)]
    strip_zeros: bool,
    /// Largest |D2| the exhaustive oracle accepts.
    #[arg(long, global = true, env = "RAOSEQ_ORACLE_CAP", default_value_t = raoseq::rao_order::DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Largest host graph for induced-subgraph search.
    #[arg(long, global = true, default_value_t = raoseq::rao_order::DEFAULT_INDUCED_CAP)]
    induced_cap: usize,
    /// Run searches on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Erdős–Gallai graphicality check.
    Check {
        /// Sequence, e.g. `3,3,1,1` or `2^12`. Read per line from --file or stdin when absent.
        sequence: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Also report whether n >= d1^2 (sufficient for even-sum sequences).
        #[arg(long = "length-bound", visible_alias = "prop4")]
        prop4: bool,
    },
    /// Print a realization as an edge list (or JSON).
    Realize {
        sequence: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Keep every component within 3*d1^2 vertices.
        #[arg(long)]
        bounded: bool,
    },
    /// Same as `realize --bounded`.
    RealizeBounded {
        sequence: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Print the chunking and pairing instead of the graph.
        #[arg(long)]
        plan: bool,
    },
    /// Degree-count vector (a_N, ..., a_1).
    Regularity {
        sequence: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Bound N; defaults to the largest entry.
        #[arg(short = 'N', long = "bound")]
        bound: Option<u32>,
        /// Treat the input as counts (a_N, ..., a_1) and print the sequence.
        #[arg(long)]
        decode: bool,
        /// Compare pointwise against this sequence's vector.
        #[arg(long, value_name = "SEQUENCE")]
        leq: Option<String>,
    },
    /// Test D1 <= D2 in the induced-subgraph order.
    Compare {
        d1: String,
        d2: String,
        #[arg(long, value_enum, default_value_t = CompareMethod::Auto)]
        method: CompareMethod,
        /// Bound N for the count-vector test; defaults to the largest entry of either.
        #[arg(short = 'N', long = "bound")]
        bound: Option<u32>,
    },
    /// Find a good pair i < j with D_i <= D_j in a generated stream.
    Harness {
        #[arg(short = 'N', long = "bound")]
        bound: u32,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_length: usize,
        #[arg(long, value_enum, default_value_t = GeneratorArg::Random)]
        generator: GeneratorArg,
        /// Print the generated stream before the report.
        #[arg(long)]
        show_stream: bool,
        /// Include wall-clock time (output is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Greedy antichain of short graphic sequences under the exact order.
    Antichain {
        #[arg(short = 'N', long = "bound")]
        bound: u32,
        #[arg(long, default_value_t = 6)]
        max_length: usize,
        #[arg(long, default_value_t = 1)]
        min_length: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CompareMethod {
    Auto,
    Sufficient,
    Components,
    Oracle,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum GeneratorArg {
    Random,
    Enumerate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match commands::run(&cli, &mut out) {
        Ok(outcome) => ExitCode::from(outcome as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::Outcome::UsageError as u8)
        }
    }
}
