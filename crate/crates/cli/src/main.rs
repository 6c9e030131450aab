//! `hgperiod`: character classification, orbit enumeration, and identity
//! verification from the command line.

mod args;
mod commands;
mod fixture;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use report::Outcome;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::execute(&cli) {
        Ok(out) => {
            println!("{}", out.report.render(cli.format()));
            ExitCode::from(out.exit_code())
        }
        Err(Outcome::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Outcome::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
