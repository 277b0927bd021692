use std::process::ExitCode;

use clap::Parser;
use mvcomp_cli::{exit_code, render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli);
    print!("{}", render(&cli, &report));
    ExitCode::from(exit_code(&report) as u8)
}
