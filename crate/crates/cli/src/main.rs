use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use normcat::category::TieBreak;
use normcat::partition_category::{normal_factorize, PartitionMorphism};
use normcat::suites::{self, Kind, SuiteConfig, DEFAULT_BOUND};
use normcat::Error;

/// Exhaustive checks on small normal categories of a finite set.
#[derive(Debug, Parser)]
#[command(name = "normcat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification suites and print a report.
    Run {
        /// Size of the base set.
        #[arg(long)]
        n: usize,
        /// Suite to run (repeatable): core, pi-normal, powerset, dual,
        /// iso-G, iso-PQ, cones or all.
        #[arg(long = "suite", default_value = "all")]
        suites: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Work bound for the brute-force checks.
        #[arg(long, env = "NORMCAT_BOUND", default_value_t = DEFAULT_BOUND)]
        bound: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List structures in canonical order, one JSON record per line.
    Enumerate {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "NORMCAT_BOUND", default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Normal factorization of a partition-category morphism given as JSON,
    /// e.g. '{"source":[[0,1],[2]],"target":[[0,1,2]],"eta":[1]}'.
    Factorize {
        morphism: String,
        #[arg(long, value_enum, default_value_t = Tie::Least)]
        tie: Tie,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Partitions,
    Transformations,
    Idempotents,
    Cones,
    DualObjects,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Tie {
    Least,
    Greatest,
}

const USAGE: u8 = 2;
const SKIPPED: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            n,
            suites,
            format,
            bound,
            out,
        } => {
            let config =
                match suites::parse_suites(&suites).and_then(|s| SuiteConfig::new(n, s, bound)) {
                    Ok(c) => c,
                    Err(msg) => return usage(&msg),
                };
            let report = suites::run(&config);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            if let Err(e) = emit(out.as_ref(), &text) {
                eprintln!("normcat: {e}");
                return ExitCode::FAILURE;
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Command::Enumerate { kind, n, bound } => {
            if !(2..=suites::MAX_N).contains(&n) {
                return usage(&format!(
                    "n must be between 2 and {}, got {n}",
                    suites::MAX_N
                ));
            }
            let kind = match kind {
                KindArg::Partitions => Kind::Partitions,
                KindArg::Transformations => Kind::Transformations,
                KindArg::Idempotents => Kind::Idempotents,
                KindArg::Cones => Kind::Cones,
                KindArg::DualObjects => Kind::DualObjects,
            };
            match suites::enumerate(kind, n, bound) {
                Ok(items) => {
                    let mut text = String::new();
                    for item in items {
                        text.push_str(&item.to_string());
                        text.push('\n');
                    }
                    match emit(None, &text) {
                        Ok(()) => ExitCode::SUCCESS,
                        Err(e) => {
                            eprintln!("normcat: {e}");
                            ExitCode::FAILURE
                        }
                    }
                }
                Err(e @ Error::BoundExceeded { .. }) => {
                    eprintln!("normcat: {e}");
                    ExitCode::from(SKIPPED)
                }
                Err(e) => {
                    eprintln!("normcat: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        Command::Factorize { morphism, tie } => {
            let f: PartitionMorphism = match serde_json::from_str(&morphism) {
                Ok(f) => f,
                Err(e) => return usage(&format!("bad morphism: {e}")),
            };
            let tie = match tie {
                Tie::Least => TieBreak::Least,
                Tie::Greatest => TieBreak::Greatest,
            };
            let fact = normal_factorize(&f, tie);
            println!(
                "{}",
                serde_json::to_string_pretty(&fact).expect("serializable")
            );
            ExitCode::SUCCESS
        }
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("normcat: {msg}");
    ExitCode::from(USAGE)
}

fn emit(out: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}
