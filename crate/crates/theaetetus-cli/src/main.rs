use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use clap::Parser;
use theaetetus_cli::{args::CliConfig, run_cli};

fn main() -> ExitCode {
    // clap handles malformed arguments itself and exits 2.
    let config = CliConfig::parse();
    let mut stdout = std::io::stdout().lock();
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| run_cli(config, &mut stdout)));
    let _ = stdout.flush();
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
        // A panic is a broken internal invariant (a self-validation assert,
        // a refuted lemma): report it as a contract violation.
        Err(_) => {
            eprintln!("error: internal contract violation");
            ExitCode::from(1)
        }
    }
}
