use std::process::ExitCode;

use clap::Parser;
use morse_pdcm::app::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("morse-pdcm: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
