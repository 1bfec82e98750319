//! Command-line front end for `xdiscord`: single-state reports, parameter
//! sweeps, conditional-entropy landscapes and figure data as CSV.

pub mod args;
pub mod commands;
pub mod error;
pub mod figures;
pub mod output;

use std::io::Write;

pub use args::Cli;
pub use error::{CliError, Result};

use args::Command;

/// The arguments that determine output content, joined for metadata lines.
/// Output location and `--force` are dropped so reruns elsewhere match.
pub fn invocation(args: &[String]) -> String {
    let mut kept = Vec::with_capacity(args.len());
    let mut skip_value = false;
    for a in args {
        if skip_value {
            skip_value = false;
        } else if a == "--out" {
            skip_value = true;
        } else if a != "--force" && !a.starts_with("--out=") {
            kept.push(a.as_str());
        }
    }
    kept.join(" ")
}

/// Runs one parsed command. `invocation` is recorded in CSV metadata lines.
pub fn run(cli: &Cli, invocation: &str, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Report(a) => commands::report(a, out),
        Command::Sweep(a) => commands::sweep(a, invocation),
        Command::Landscape(a) => commands::landscape(a, invocation),
        Command::Figures(a) => {
            for path in figures::write_figure(a.id, &a.out, a.force, invocation)? {
                writeln!(out, "{}", path.display()).map_err(|e| CliError::io("<stdout>", e))?;
            }
            Ok(())
        }
        Command::Verify(a) => commands::verify(a, out),
    }
}
