//! `atl`: command-line front end. Exit status 0 on success, 1 when a check
//! fails under --expect-pass, 2 on input errors.

mod args;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};
use commands::Ctx;
use error::CliResult;
use output::{Report, ScalarFmt};

fn execute(cli: &Cli) -> CliResult<Report> {
    if let Some(n) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let ctx = Ctx {
        fmt: ScalarFmt {
            approx: cli.global.approx.then_some(cli.global.digits),
        },
        conductor: cli.global.conductor,
    };
    commands::run(&cli.command, &ctx)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => {
            println!("{}", report.render(cli.global.format == Format::Json));
            if cli.global.expect_pass && report.check == Some(false) {
                eprintln!("check failed");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
