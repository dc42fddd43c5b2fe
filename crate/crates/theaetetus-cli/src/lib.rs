//! Library half of the CLI: argument grammar, report builders, wire forms,
//! and the dispatcher. The binary in `main.rs` is a thin shell over
//! [`run_cli`] so tests (and fuzz targets) drive the same code paths.
//!
//! Exit code contract: 0 success, 2 invalid arguments, 1 internal contract
//! violation (a verdict contradicting its oracle under `--verify`, or an
//! I/O failure).

pub mod args;
pub mod reports;
pub mod table;

use std::fmt;
use std::io::Write;

use args::{CliConfig, Command, Emit, OracleCommand, OutputFormat};
use reports::{AuditReport, ClassifyReport, Disagreement, OracleReport, ProveReport, X9Report};
use serde::Serialize;
use table::TableDocument;

#[derive(Debug)]
pub enum CliError {
    /// Arguments parsed but name an unsupported combination. Exit 2.
    Usage(String),
    /// A decision procedure contradicted its oracle. Exit 1.
    Contract(String),
    /// Output could not be written. Exit 1.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Contract(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
            CliError::Contract(msg) => write!(f, "internal contract violation: {msg}"),
            CliError::Io(msg) => write!(f, "io: {msg}"),
        }
    }
}

impl From<Disagreement> for CliError {
    fn from(d: Disagreement) -> Self {
        CliError::Contract(d.to_string())
    }
}

/// Runs one parsed command, writing the (deterministic) output either to
/// `out` or to the `--output` path.
pub fn run_cli(config: CliConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let (emit, payload) = render(config)?;
    match &emit.output {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => out
            .write_all(payload.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

/// Builds the full output string for one command.
fn render(config: CliConfig) -> Result<(Emit, String), CliError> {
    match config.command {
        Command::Classify { n, emit } => {
            let report = ClassifyReport::build(&n);
            let payload = match emit.format {
                OutputFormat::Text => report.to_text(),
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => report.to_csv(),
            };
            Ok((emit, payload))
        }
        Command::Prove {
            n,
            degree,
            verify,
            q_bound,
            emit,
        } => {
            let report = ProveReport::build(&n, degree, verify, &q_bound)?;
            let payload = match emit.format {
                OutputFormat::Text => report.to_text(),
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => return Err(no_csv("prove")),
            };
            Ok((emit, payload))
        }
        Command::Table { max, emit } => {
            let doc = TableDocument::build(&max);
            let payload = match emit.format {
                OutputFormat::Text => doc.to_text(),
                OutputFormat::Json => doc.to_json_string(),
                OutputFormat::Csv => doc.to_csv_string(),
            };
            Ok((emit, payload))
        }
        Command::X9 {
            a,
            b,
            verify,
            bound,
            emit,
        } => {
            let report = X9Report::build(&a, &b, verify, &bound)?;
            let payload = match emit.format {
                OutputFormat::Text => report.to_text(),
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => return Err(no_csv("x9")),
            };
            Ok((emit, payload))
        }
        Command::Audit {
            a,
            b,
            verify,
            bound,
            emit,
        } => {
            let report = AuditReport::build(&a, &b, verify, &bound)?;
            let payload = match emit.format {
                OutputFormat::Text => report.to_text(),
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => return Err(no_csv("audit")),
            };
            Ok((emit, payload))
        }
        Command::Oracle(oracle) => {
            let (report, emit) = match oracle {
                OracleCommand::Root { n, degree, bound, emit } => {
                    (OracleReport::root(&n, degree, &bound), emit)
                }
                OracleCommand::Ratio { a, b, bound, emit } => {
                    (OracleReport::ratio(&a, &b, &bound), emit)
                }
            };
            let payload = match emit.format {
                OutputFormat::Text => report.to_text(),
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => return Err(no_csv("oracle")),
            };
            Ok((emit, payload))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut json = serde_json::to_string_pretty(value).expect("reports serialize");
    json.push('\n');
    json
}

fn no_csv(command: &str) -> CliError {
    CliError::Usage(format!(
        "`{command}` has no csv form; csv is available for classify and table"
    ))
}
