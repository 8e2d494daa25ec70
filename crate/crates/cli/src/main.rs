mod args;
mod run;

use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    if let Err(f) = run::configure_threads() {
        return f.report();
    }
    match run::run(cli.command) {
        Ok(code) => code,
        Err(f) => f.report(),
    }
}
