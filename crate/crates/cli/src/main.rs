//! `dtqw`: build, simulate, verify and sweep adjustable-depth coin circuits
//! for position-dependent quantum walks on a cycle.
//!
//! Exit status: 0 success, 2 usage, 3 resource limit, 4 failed check.

mod commands;
mod error;
mod spec;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{ExportArgs, SweepArgs, VerifyArgs};
use error::CliError;
use spec::RunSpec;

#[derive(Parser, Debug)]
#[command(name = "dtqw", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simulate the walk through the circuit and compare with the direct
    /// operator walk. Writes JSON.
    Run(RunSpec),
    /// Check the coin circuit against the coin operator on every walker
    /// basis state. Writes JSON.
    Verify(VerifyArgs),
    /// Depth, width and size for every m. Writes CSV.
    Sweep(SweepArgs),
    /// Write a circuit in the text format.
    Export(ExportArgs),
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run(spec) => commands::cmd_run(spec.resolve()?),
        Command::Verify(args) => commands::cmd_verify(args),
        Command::Sweep(args) => commands::cmd_sweep(args),
        Command::Export(mut args) => {
            args.spec = args.spec.resolve()?;
            commands::cmd_export(args)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on its own for malformed command lines
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dtqw: {e}");
            e.exit_code()
        }
    }
}
