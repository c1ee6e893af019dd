use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use sweepcover_cli::{emit, run, Cli, EXIT_PARAMS};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_PARAMS,
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let result = run(&cli).and_then(|outcome| {
        emit(&outcome.output, cli.out.as_deref())?;
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
