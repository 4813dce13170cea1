use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use solvdeg_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = run(&cli);
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    match &cli.out {
        Some(path) if !outcome.stdout.is_empty() => {
            if let Err(e) = std::fs::write(path, &outcome.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => {
            let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
