//! `ppw`: pseudoperiods, powers, tuple automata and constructions from the
//! command line.
//!
//! Exit status is 0 on success, 1 when a check fails (`pp check`,
//! `power check`, `verify`, `reproduce`) and 2 for bad usage or input.

mod commands;
mod output;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "ppw", version, about = "Pseudoperiodic words: checks, searches and constructions")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a prefix of a named, morphic, paperfolding or Sturmian word.
    Gen(GenArgs),
    /// Pseudoperiod checks and searches.
    #[command(subcommand)]
    Pp(PpCommand),
    /// Powers and critical exponents.
    #[command(subcommand)]
    Power(PowerCommand),
    /// Tuple automata in msd-first base 2.
    #[command(subcommand)]
    Dfa(DfaCommand),
    /// Longest word with a given pseudoperiod avoiding a given power.
    Longest(LongestArgs),
    /// Check morphic constructions on finite prefixes.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// The hitting set reduction.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Canned reproduction runs with one PASS/FAIL line per check.
    Reproduce {
        #[arg(value_enum)]
        what: reproduce::Target,
        /// table1: run every finite cell instead of the headline eight.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Args)]
pub struct GenArgs {
    /// Registry name: t f tr vtm mw pd rs.
    name: Option<String>,
    #[arg(long)]
    len: usize,
    /// Morphism file (`0->01 1->10`), iterated from --seed.
    #[arg(long, requires = "seed", conflicts_with = "name")]
    morphism: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u8>,
    /// Paperfolding code as a string of + and - signs.
    #[arg(long, conflicts_with_all = ["name", "morphism"], allow_hyphen_values = true)]
    fold: Option<String>,
    /// Partial quotients of a Sturmian slope, comma separated.
    #[arg(long, conflicts_with_all = ["name", "morphism", "fold"], value_delimiter = ',')]
    cf: Option<Vec<u32>>,
}

/// Where the word comes from: a registry sequence, literal text or a file.
#[derive(Args)]
pub struct Source {
    /// Registry sequence name (needs --len).
    #[arg(long, conflicts_with_all = ["word", "file"], requires = "len")]
    seq: Option<String>,
    /// The word itself: digits, space-separated integers or letters.
    #[arg(long, conflicts_with = "file")]
    word: Option<String>,
    /// File holding the word.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Prefix length (truncates --word and --file input).
    #[arg(long)]
    len: Option<usize>,
}

#[derive(Subcommand)]
enum PpCommand {
    /// Whether the tuple holds at every constrained position.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        tuple: String,
    },
    /// Least k-tuple with entries up to the bound that holds.
    Find {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bound: usize,
    },
    /// Every k-tuple with entries up to the bound that holds.
    Enum {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bound: usize,
    },
    /// Smallest size of a tuple with entries up to the bound that holds.
    Min {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        bound: usize,
    },
}

#[derive(Subcommand)]
enum PowerCommand {
    /// Look for a factor reaching the exponent (`7/3`, `3+`, ...).
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long = "exp")]
        exponent: String,
    },
    /// Largest exponent of a factor.
    Critexp {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum DfaCommand {
    /// Run a tuple through an automaton file (`@triple` for the built-in one).
    Accepts { file: String, tuple: String },
    /// Accepted tuples with every entry at most the bound.
    Enum {
        file: String,
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Args)]
pub struct LongestArgs {
    #[arg(long)]
    pp: String,
    #[arg(long = "exp")]
    exponent: String,
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    /// Depth at which the tree counts as infinite.
    #[arg(long, default_value_t = 10_000)]
    cap: usize,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Pseudoperiod and power avoidance of m(base) on a prefix.
    Morphism {
        /// Vendored morphism name (sha3, h_1_6, res_4_5, ...).
        #[arg(long, conflicts_with = "file")]
        name: Option<String>,
        /// Morphism file instead of a vendored one.
        #[arg(long, requires = "base")]
        file: Option<PathBuf>,
        /// Sequence the morphism is applied to (defaults to the vendored base).
        #[arg(long)]
        base: Option<String>,
        /// Compose with the doubling map 0->01 1->10 first.
        #[arg(long)]
        doubled: bool,
        #[arg(long)]
        pp: String,
        #[arg(long = "exp")]
        exponent: String,
        #[arg(long, default_value_t = 10_000)]
        len: usize,
    },
    /// A residue-class morphism: pseudoperiod (1, a) for sampled a, 3+-free.
    Residue {
        #[arg(long)]
        name: String,
        #[arg(long, value_delimiter = ',')]
        samples: Vec<usize>,
        #[arg(long, default_value_t = 10_000)]
        len: usize,
    },
    /// One of the uniform large-alphabet constructions (18_37, 4_10, 9_19).
    Theorem {
        which: String,
        #[arg(long, default_value_t = 50)]
        base_len: usize,
    },
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Hitting set file to pseudoperiod instance.
    Build { file: PathBuf },
    /// Solve a pseudoperiod instance (or a hitting set one with --hitting-set).
    Solve {
        file: PathBuf,
        #[arg(long)]
        hitting_set: bool,
        #[arg(long, default_value_t = pseudoperiodic::reduction::DEFAULT_GUARD)]
        guard: u128,
    },
    /// Hitting set read off a solution of a built instance.
    Extract {
        file: PathBuf,
        #[arg(long)]
        solution: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("ppw: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(cli.command) {
        Ok(report) => {
            report.print(cli.json);
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("ppw: {e}");
            ExitCode::from(2)
        }
    }
}
