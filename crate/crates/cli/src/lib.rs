//! Command-line front end: spectra, wavefunctions and partner potentials as
//! CSV or JSON, plus a verification report.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod verify;

pub use config::{CheckKind, Cli, Command, Method, OutputFormat, RunArgs, RunConfig};
pub use error::{CliError, CliResult};
pub use verify::{Verdict, VerifyReport};

use std::io::Write;

/// Exit status when every step succeeded.
pub const EXIT_OK: i32 = 0;
/// Exit status of `verify` when a check evaluated but missed its tolerance.
pub const EXIT_CHECKS_FAILED: i32 = 1;
/// Exit status for a check that could not be evaluated.
pub const EXIT_RUNTIME: i32 = 3;

/// Runs one subcommand, writing its table to `out`. Returns the exit status.
pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    match cli.command {
        Command::Spectrum(args) => {
            commands::cmd_spectrum(&RunConfig::from_args(args, OutputFormat::Csv)?, out)?
        }
        Command::Wavefunction { run, n } => {
            let cfg = RunConfig::from_args(run, OutputFormat::Csv)?;
            commands::cmd_wavefunction(&cfg, n.unwrap_or(0), out)?
        }
        Command::Partner(args) => {
            commands::cmd_partner(&RunConfig::from_args(args, OutputFormat::Csv)?, out)?
        }
        Command::Verify(args) => {
            let cfg = RunConfig::from_args(args, OutputFormat::Json)?;
            return Ok(match verify::cmd_verify(&cfg, out)? {
                Verdict::AllPassed => EXIT_OK,
                Verdict::ChecksFailed => EXIT_CHECKS_FAILED,
                Verdict::Broken => EXIT_RUNTIME,
            });
        }
    }
    Ok(EXIT_OK)
}
