use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fockspace::canonical::{canonical_basis, decomposition_matrix};
use fockspace::crystal::{crystal_graph, enumerate_kleshchev};
use fockspace::error::Error;
use fockspace::mpart::{Modulus, Residue, ResidueParams};
use fockspace::verify::run_suite;
use serde_json::{json, Value};

/// Kleshchev multipartitions, crystal graphs, canonical bases and graded
/// decomposition matrices of level-m Fock spaces.
#[derive(Parser, Debug)]
#[command(name = "fockspace", version)]
struct Cli {
    /// Worker threads for parallel sections (0 = one per core). Output does
    /// not depend on this.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    /// Modulus: an integer >= 2, or `inf`.
    #[arg(long)]
    r: Modulus,
    /// Comma-separated charges, one per component.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    gamma: Vec<Residue>,
}

impl ParamArgs {
    fn params(&self) -> Result<ResidueParams, Error> {
        ResidueParams::new(self.r, self.gamma.clone())
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the Kleshchev multipartitions of size n, most dominant first.
    Kleshchev {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The Kashiwara crystal graph on Kleshchev multipartitions.
    Crystal {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// The canonical basis of the size-n weight spaces.
    Canonical {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The graded decomposition matrix.
    Decomp {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Print entries evaluated at v = 1 instead of graded entries.
        #[arg(long)]
        at_one: bool,
    },
    /// Run every self-check for sizes 0..=max-n; exits 1 on any failure.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Check(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) | Error::InvalidPartition(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            Error::TriangularityFailure { .. }
            | Error::EliminationDivergence { .. }
            | Error::CongruenceFailure { .. }
            | Error::ContractViolation(_) => Failure::Check(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn require(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "format `{}` is not available for this command",
            format.to_possible_value().expect("no skipped variants").get_name()
        )))
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn run(command: &Command) -> Result<(String, bool), Failure> {
    let out = match command {
        Command::Kleshchev { params, n, format } => {
            require(*format, &[Format::Text, Format::Json])?;
            let labels = enumerate_kleshchev(&params.params()?, *n);
            match format {
                Format::Json => pretty(&json!(labels.iter().map(ToString::to_string).collect::<Vec<_>>())),
                _ => labels.iter().map(|l| format!("{l}\n")).collect(),
            }
        }
        Command::Crystal { params, max_size, format } => {
            require(*format, &[Format::Text, Format::Json, Format::Dot])?;
            let g = crystal_graph(&params.params()?, *max_size);
            match format {
                Format::Json => pretty(&g.to_json()),
                Format::Dot => g.to_dot(),
                _ => g.edges.iter().map(|(s, i, t)| format!("{s} -{i}-> {t}\n")).collect(),
            }
        }
        Command::Canonical { params, n, format } => {
            require(*format, &[Format::Text, Format::Json])?;
            let g = canonical_basis(&params.params()?, *n)?;
            match format {
                Format::Json => pretty(&g.to_json()),
                _ => g.entries().iter().map(|e| format!("G({}) = {}\n", e.label, e.vector)).collect(),
            }
        }
        Command::Decomp { params, n, format, at_one } => {
            require(*format, &[Format::Text, Format::Json, Format::Csv])?;
            let d = decomposition_matrix(&params.params()?, *n)?;
            match (format, at_one) {
                (Format::Json, _) => pretty(&d.to_json()),
                (_, true) => d.to_csv_at_one(),
                (_, false) => d.to_csv_graded(),
            }
        }
        Command::Verify { params, max_n, seed, format } => {
            require(*format, &[Format::Text, Format::Json])?;
            let report = run_suite(&params.params()?, *max_n, *seed);
            let text = match format {
                Format::Json => pretty(&json!({
                    "passed": report.passed(),
                    "checks": report.checks.iter().map(|c| json!({
                        "name": c.name, "passed": c.passed, "detail": c.detail,
                    })).collect::<Vec<_>>(),
                    "observations": report.observations,
                })),
                _ => report.to_string(),
            };
            return Ok((text, report.passed()));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let outcome = std::panic::catch_unwind(|| run(&cli.command))
        .unwrap_or_else(|_| Err(Failure::Internal("internal assertion failed".into())));
    match outcome {
        Ok((text, passed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(3);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
