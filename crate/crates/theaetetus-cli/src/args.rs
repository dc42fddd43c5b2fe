//! Command-line grammar. Numeric arguments parse straight into [`Natural`],
//! so zero, signs and junk are rejected at the argument layer (exit 2).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use euclid_arith::{Degree, Natural};

#[derive(Parser, Debug)]
#[command(name = "theaetetus", version, about = "Exact arithmetic of lengths and powers: classify naturals, prove (ir)rationality of roots, decide commensurability", long_about = None)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a natural: plane and solid class, figures, factorizations
    Classify {
        #[arg(value_parser = parse_natural)]
        n: Natural,
        #[command(flatten)]
        emit: Emit,
    },
    /// Decide whether the root of n is rational; print the proof trace
    Prove {
        #[arg(value_parser = parse_natural)]
        n: Natural,
        /// Root degree, 2 or 3
        #[arg(long, default_value = "2", value_parser = parse_degree)]
        degree: Degree,
        /// Cross-check the verdict against the brute-force oracle
        #[arg(long)]
        verify: bool,
        /// Oracle search bound on q (used with --verify)
        #[arg(long = "q-bound", default_value = "1000", value_parser = parse_natural)]
        q_bound: Natural,
        #[command(flatten)]
        emit: Emit,
    },
    /// Emit the classification table for 1..=max with a line-kind column
    Table {
        #[arg(long, value_parser = parse_natural)]
        max: Natural,
        #[command(flatten)]
        emit: Emit,
    },
    /// Decide commensurability of sqrt(a) with sqrt(b)
    X9 {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_parser = parse_natural)]
        b: Natural,
        /// Cross-check the verdict against the brute-force oracle
        #[arg(long)]
        verify: bool,
        /// Oracle search bound on p and q (used with --verify)
        #[arg(long, default_value = "1000", value_parser = parse_natural)]
        bound: Natural,
        #[command(flatten)]
        emit: Emit,
    },
    /// Audit the pair (sqrt(a), sqrt(b)) against the length/power partition
    Audit {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_parser = parse_natural)]
        b: Natural,
        /// Cross-check the embedded verdict against the brute-force oracle
        #[arg(long)]
        verify: bool,
        /// Oracle search bound (used with --verify)
        #[arg(long, default_value = "1000", value_parser = parse_natural)]
        bound: Natural,
        #[command(flatten)]
        emit: Emit,
    },
    /// Raw access to the brute-force oracles
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Search for p, q with p^degree = n·q^degree
    Root {
        #[arg(value_parser = parse_natural)]
        n: Natural,
        /// Root degree, 2 or 3
        #[arg(long, default_value = "2", value_parser = parse_degree)]
        degree: Degree,
        /// Search bound on q
        #[arg(long, default_value = "1000", value_parser = parse_natural)]
        bound: Natural,
        #[command(flatten)]
        emit: Emit,
    },
    /// Search for p, q <= bound with a·q² = b·p²
    Ratio {
        #[arg(value_parser = parse_natural)]
        a: Natural,
        #[arg(value_parser = parse_natural)]
        b: Natural,
        /// Search bound on p and q
        #[arg(long, default_value = "1000", value_parser = parse_natural)]
        bound: Natural,
        #[command(flatten)]
        emit: Emit,
    },
}

/// Shared output options.
#[derive(Args, Debug, Clone)]
pub struct Emit {
    /// Output format (csv only for classify and table)
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_degree(s: &str) -> Result<Degree, String> {
    let raw: u32 = s.parse().map_err(|_| format!("degree must be 2 or 3, got {s:?}"))?;
    Degree::try_from(raw).map_err(|e| e.to_string())
}
