//! `dawg`: build text indexes, export them, check them against brute force,
//! and time them.

mod bench;
mod build;
mod input;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dawg_core::StructureKind;

use crate::input::Format;

#[derive(Parser)]
#[command(name = "dawg", version, about = "Suffix tree, DAWG and minimal absent word toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build structures for one text and write stats and exports.
    Build(BuildArgs),
    /// Check every structure against brute-force oracles.
    Verify(VerifyArgs),
    /// Time every structure on random texts of growing length.
    Bench(BenchArgs),
}

#[derive(Args)]
pub struct BuildArgs {
    /// Input file.
    #[arg(long = "in", value_name = "PATH", conflicts_with = "string", required_unless_present = "string")]
    pub input: Option<PathBuf>,
    /// Inline input.
    #[arg(long = "str", value_name = "S")]
    pub string: Option<String>,
    #[arg(long, value_enum, default_value = "bytes")]
    pub format: Format,
    /// Structures to build: st, dawg, rdawg, affix, cdawg, scdawg, lstrie, maw.
    #[arg(long, value_delimiter = ',', default_value = "st,dawg")]
    pub structs: Vec<StructureKind>,
    /// Declared alphabet size; defaults to the number of distinct symbols.
    #[arg(long, value_name = "K")]
    pub sigma: Option<usize>,
    /// Graphviz output. With several structures, the name of each is
    /// inserted before the extension.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    /// Stats as JSON.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Minimal absent words as TSV.
    #[arg(long, value_name = "PATH")]
    pub tsv: Option<PathBuf>,
    /// Print stats as JSON on stdout.
    #[arg(long)]
    pub stats: bool,
    /// Add the decoded word to each TSV row.
    #[arg(long)]
    pub decode: bool,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Suites to run, by name or name prefix; all by default.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Cap on string lengths.
    #[arg(long, value_name = "K")]
    pub max_n: Option<usize>,
    #[arg(long, value_name = "K", default_value_t = 0x5eed)]
    pub seed: u64,
    /// Fraction of the random cases to run.
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
}

#[derive(Args)]
pub struct BenchArgs {
    /// Text lengths; scientific notation such as 1e5 is accepted.
    #[arg(long, value_delimiter = ',', value_parser = parse_size, default_value = "1e5,2e5,4e5")]
    pub sizes: Vec<usize>,
    /// Alphabet size of the random texts.
    #[arg(long, value_name = "K", default_value_t = 256)]
    pub sigma: u64,
    /// Runs per size; the median is reported.
    #[arg(long, default_value_t = 5)]
    pub runs: usize,
    #[arg(long, value_name = "K", default_value_t = 1)]
    pub seed: u64,
    /// Alphabet sizes for a sweep at the first size; `n` means the length.
    #[arg(long, value_delimiter = ',')]
    pub sweep: Vec<String>,
    /// Report as JSON.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

fn parse_size(s: &str) -> Result<usize, String> {
    s.parse::<usize>()
        .or_else(|_| s.parse::<f64>().map(|x| x as usize))
        .map_err(|_| format!("'{s}' is not a size"))
        .and_then(|n| if n == 0 { Err("sizes must be positive".into()) } else { Ok(n) })
}

/// Exit statuses.
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VERIFY: u8 = 2;
pub const EXIT_CORRUPT: u8 = 3;

fn exit_code_of(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<dawg_core::Error>() {
        Some(dawg_core::Error::StructureCorrupt(_) | dawg_core::Error::NotSorted { .. }) => EXIT_CORRUPT,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Build(args) => build::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Bench(args) => bench::run(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_of(&e))
        }
    }
}
