//! Subcommands of the `sais-lcp` tool.
//!
//! Exit codes: 0 on success, 1 when verification fails, 2 on usage and IO
//! errors.

pub mod algo;
pub mod bench;
pub mod commands;
pub mod format;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use sais_lcp::gen::GenKind;
use sais_lcp::{SstarLcpMethod, TrackerKind};

pub use algo::Algo;
pub use format::Format;

#[derive(Debug, Parser)]
#[command(
    name = "sais-lcp",
    version,
    about = "Suffix and LCP arrays by induced sorting"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the suffix array and optionally the LCP array of a file.
    Build(BuildArgs),
    /// Build with one algorithm and certify the result.
    Verify(VerifyArgs),
    /// Time SA and LCP construction on one or more files.
    Bench(BenchArgs),
    /// Write a synthetic input.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub input: PathBuf,
    /// Suffix array output [default: INPUT.sa]
    #[arg(long)]
    pub sa: Option<PathBuf>,
    /// LCP array output; LCP is only built when given.
    #[arg(long)]
    pub lcp: Option<PathBuf>,
    #[arg(long, default_value_t = Format::Bin64)]
    pub format: Format,
    #[arg(long, default_value_t = TrackerKind::default())]
    pub rmq: TrackerKind,
    #[arg(long, default_value_t = SstarLcpMethod::default())]
    pub sstar: SstarLcpMethod,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub input: PathBuf,
    #[arg(long, default_value_t = Algo::Induce)]
    pub algo: Algo,
    #[arg(long, default_value_t = TrackerKind::default())]
    pub rmq: TrackerKind,
    #[arg(long, default_value_t = SstarLcpMethod::default())]
    pub sstar: SstarLcpMethod,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', default_value = "induce,kasai,phi")]
    pub algos: Vec<Algo>,
    #[arg(long, default_value_t = TrackerKind::default())]
    pub rmq: TrackerKind,
    #[arg(long, default_value_t = SstarLcpMethod::default())]
    pub sstar: SstarLcpMethod,
    /// Runs per measurement; the median is reported.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub repeat: u32,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Certify every LCP array produced.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = GenKind::Random)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 4)]
    pub sigma: usize,
    #[arg(long)]
    pub length: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file [default: stdout]
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs a parsed command and returns its exit code.
pub fn run(cli: Cli) -> u8 {
    let result = match cli.command {
        Command::Build(a) => commands::build(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Bench(a) => bench::bench(&a),
        Command::Gen(a) => commands::gen(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}
