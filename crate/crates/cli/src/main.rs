//! `mis-lab`: constructions, counting, exhaustive search and verification
//! from the command line.
//!
//! Exit codes: 0 success, 2 input or usage error, 3 structural violation
//! (a forbidden clique), 4 verification mismatch.

mod cli;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};
use output::{Ctx, Failure};

fn run(cli: &Cli) -> Result<(), Failure> {
    let threads = match cli.threads {
        Some(0) => return Err(Failure::Usage("--threads must be positive".into())),
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let ctx = Ctx { seed: cli.seed, threads };
    match &cli.command {
        Command::Construct(a) => commands::construct(a),
        Command::Count(a) => commands::count(&ctx, a),
        Command::Search(a) => commands::search(&ctx, a),
        Command::Verify(a) => commands::verify(&ctx, a),
        Command::Reduce(a) => commands::reduce(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.code())
        }
    }
}
