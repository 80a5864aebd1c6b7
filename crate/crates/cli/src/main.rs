mod args;
mod batch;
mod commands;
mod io;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Success, verified, found, or the checked statement holds.
pub const OK: i32 = 0;
/// A search finished without finding what it was asked for.
pub const FAILED: i32 = 1;
/// A certificate was rejected or a counterexample was found.
pub const VIOLATION: i32 = 2;
/// The instance is beyond the configured limits.
pub const REFUSED: i32 = 3;
/// Bad usage or unreadable input.
pub const USAGE: i32 = 64;

/// Parse `argv` (program name first) and run it against the given writers.
pub fn run_args<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => commands::run(&cli, out, err),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                USAGE
            } else {
                let _ = write!(out, "{text}");
                OK
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE as u8 } else { OK as u8 });
        }
    };
    let threads = cli.threads.unwrap_or(1);
    if threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(USAGE as u8);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
        eprintln!("error: cannot start {threads} worker threads: {e}");
        return ExitCode::from(USAGE as u8);
    }
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = commands::run(&cli, &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
