//! `wlpkit`: face-ring computations from the command line.
//!
//! Every command prints either a human-readable report or, with
//! `--format structured`, one JSON object:
//!
//! ```text
//! {"version": 1, "command": "...", "seed": 0, "field": "q", "result": {...}}
//! ```
//!
//! Failures use the same envelope with an `error` object in place of
//! `result`. Exit codes: 0 success, 2 a checked property fails, 3 bad input
//! or unmet precondition, 4 a randomized search ran out of tries.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use wlpkit::{Error, ErrorClass, FieldSpec};

/// Version of the structured output schema.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "wlpkit", version, about = "Exact face-ring computations on simplicial complexes")]
pub(crate) struct Cli {
    #[command(subcommand)]
    pub(crate) command: Command,
    /// Coefficient field: `q`, `fp` (p = 2^61 - 1) or `fp:<prime>`.
    #[arg(long, global = true, default_value = "q")]
    pub(crate) field: FieldSpec,
    /// Seed for every random choice; echoed in the output.
    #[arg(long, global = true, default_value_t = 0)]
    pub(crate) seed: u64,
    /// Trials for randomized searches.
    #[arg(long, global = true, default_value_t = 5)]
    pub(crate) max_tries: usize,
    /// Re-check a weak Lefschetz certificate over Q.
    #[arg(long, global = true)]
    pub(crate) certify: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub(crate) format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Human,
    Structured,
}

#[derive(Subcommand, Debug)]
pub(crate) enum Command {
    /// f-, h- and g-vectors of a complex.
    Fvector { input: PathBuf },
    /// h- and g-vectors of a complex.
    Hvector { input: PathBuf },
    /// Dehn-Sommerville, unimodality and the M-vector condition on g.
    Gcheck { input: PathBuf },
    /// Homological flags: manifold, sphere, Cohen-Macaulay, Gorenstein*, Buchsbaum, orientable.
    Classify { input: PathBuf },
    /// Search for a weak Lefschetz element.
    Wlp {
        input: PathBuf,
        /// Directory for the certificate file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate written by `wlp`.
    Verify { input: PathBuf, certificate: PathBuf },
    /// Seeded random walk of bistellar moves with the g-vector ledger.
    Walk {
        input: PathBuf,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        /// Directory for one facet file per step and the ledger.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// h', h'' and g'' of a Buchsbaum complex, with socle data for orientable manifolds.
    ManifoldG { input: PathBuf },
    /// Even Betti numbers of the toric variety of a fan file.
    Toric { input: PathBuf },
    /// Graded dimensions and monomial bases of an Artinian reduction.
    Reduce { input: PathBuf },
    /// Hilbert function and series of the face ring.
    Hilbert {
        input: PathBuf,
        /// Last degree listed; defaults to d + 3.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Socle dimensions of an Artinian reduction.
    Socle { input: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Fvector { .. } => "fvector",
            Command::Hvector { .. } => "hvector",
            Command::Gcheck { .. } => "gcheck",
            Command::Classify { .. } => "classify",
            Command::Wlp { .. } => "wlp",
            Command::Verify { .. } => "verify",
            Command::Walk { .. } => "walk",
            Command::ManifoldG { .. } => "manifold-g",
            Command::Toric { .. } => "toric",
            Command::Reduce { .. } => "reduce",
            Command::Hilbert { .. } => "hilbert",
            Command::Socle { .. } => "socle",
        }
    }
}

/// What a command hands back for rendering.
pub struct Outcome {
    pub result: Value,
    pub human: String,
    /// Field the command actually ran over.
    pub field: FieldSpec,
    /// 0, or 2 when a checked property fails, or 4 when a search ran dry.
    pub code: u8,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io { path: PathBuf, message: String },
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 3,
            CliError::Core(e) => match e.class() {
                ErrorClass::LawViolated => 2,
                ErrorClass::Input => 3,
                ErrorClass::SearchExhausted => 4,
            },
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Core(e) => e.kind(),
        }
    }

    fn line(&self) -> Option<usize> {
        match self {
            CliError::Core(Error::Parse { line, .. }) if *line > 0 => Some(*line),
            _ => None,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, message } => write!(f, "{}: {message}", path.display()),
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    version: u32,
    command: &'a str,
    pub(crate) seed: u64,
    field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<&'a Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorReport>,
}

#[derive(Serialize)]
struct ErrorReport {
    kind: &'static str,
    message: String,
    line: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let name = cli.command.name();
    let outcome = commands::run(&cli);
    let envelope = |field: FieldSpec, result, error| Envelope {
        version: SCHEMA_VERSION,
        command: name,
        seed: cli.seed,
        field: field.to_string(),
        result,
        error,
    };
    match outcome {
        Ok(out) => {
            match cli.format {
                Format::Structured => {
                    let env = envelope(out.field, Some(&out.result), None);
                    println!("{}", serde_json::to_string_pretty(&env).expect("json"))
                }
                Format::Human => {
                    println!("seed={} field={}", cli.seed, out.field);
                    print!("{}", out.human);
                }
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if cli.format == Format::Structured {
                let report = ErrorReport { kind: e.kind(), message: e.to_string(), line: e.line() };
                println!("{}", serde_json::to_string_pretty(&envelope(cli.field, None, Some(report))).expect("json"));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
