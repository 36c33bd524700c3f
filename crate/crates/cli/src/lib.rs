//! Command-line front end: catalogues, parades, closed forms, sweeps,
//! verification and single-configuration checks, with JSON and CSV output.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;

use std::io::Write;

pub use args::{Cli, Command};
pub use error::CliError;
pub use output::{read_sweep_csv, write_sweep_csv, CatalogueJson, RunRecord, SweepJson};

/// Runs one parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Critical(a) => commands::critical(a, out),
        Command::Parades(a) => commands::parades(a, out),
        Command::ClosedForm(a) => commands::closed_form(a, out),
        Command::Sweep(a) => commands::run_sweep(a, out, err),
        Command::Verify(a) => commands::verify(a, out),
        Command::CheckConfig(a) => commands::check_config(a, out),
    }
}
