use std::process::ExitCode;

use clap::Parser;
use qdft::Cli;

fn main() -> ExitCode {
    match qdft::run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("qdft: one or more checks failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("qdft: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
