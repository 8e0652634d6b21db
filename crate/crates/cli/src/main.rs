use std::io;
use std::process::ExitCode;

use clap::Parser;
use markov_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match markov_cli::run(&cli, &mut stdout.lock()) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("markov: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
