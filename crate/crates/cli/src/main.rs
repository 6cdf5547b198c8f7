use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    ExitCode::from(sais_lcp_cli::run(sais_lcp_cli::Cli::parse()))
}
