use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use domino_ideals::cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&config, &mut out) {
        Ok(outcome) => {
            let _ = out.flush();
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("domino: {e}");
            ExitCode::from(2)
        }
    }
}
