use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use novikov_cli::commands::{self, BuildKind, CorrespondKind, Outcome, VerifyKind};
use novikov_cli::doc::{Document, Reader};
use novikov_cli::error::CliError;
use novikov_core::search::SearchConfig;
use novikov_core::FieldSpec;

/// Exact verification of Novikov and anti-pre-Novikov structures.
///
/// Exit status: 0 when every checked identity holds, 1 when one fails (the
/// report names it), 2 on usage or input errors.
#[derive(Parser)]
#[command(name = "novikov", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Also write the JSON output to this path.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    /// Parameter value used in coefficients, e.g. `--param a=1/2`.
    #[arg(long = "param", global = true, value_parser = parse_param)]
    params: Vec<(String, String)>,
    /// Reduce fractions such as "1/3" into GF(p) instead of rejecting them.
    #[arg(long, global = true)]
    coerce: bool,
    /// Rota-Baxter weight λ, overriding the document.
    #[arg(long, global = true, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Worker threads for searches; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Maximum number of search candidates.
    #[arg(long, global = true)]
    budget: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the identities of a structure.
    Verify {
        kind: VerifyKind,
        file: PathBuf,
        /// For anti-O-operators, also check the strong condition.
        #[arg(long)]
        strong: bool,
    },
    /// Construct a structure and print it as a document.
    Build { kind: BuildKind, file: PathBuf },
    /// Yang-Baxter equation tools.
    Ybe {
        #[command(subcommand)]
        action: YbeCmd,
    },
    /// Rota-Baxter / factorizable-solution correspondence.
    Correspond { kind: CorrespondKind, file: PathBuf },
    /// Split a vector along a factorizable solution.
    Factorize {
        file: PathBuf,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Exhaustive searches.
    Search {
        #[command(subcommand)]
        what: SearchCmd,
    },
}

#[derive(Subcommand)]
enum YbeCmd {
    /// Residual of the Yang-Baxter equation for the document's tensor.
    Check {
        file: PathBuf,
        /// Use a named tensor instead of the document's `s` ("canonical").
        #[arg(long = "s")]
        s: Option<String>,
    },
    /// All solutions with entries from a grid.
    Search {
        file: PathBuf,
        #[arg(long)]
        skew_only: bool,
        /// Integer range `lo..hi`; defaults to the whole field, or -2..2 over Q.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Every APN structure of a given dimension over GF(p).
    Apn {
        /// `gf:<p>`.
        #[arg(long, value_parser = parse_field)]
        field: FieldSpec,
        #[arg(long)]
        dim: usize,
        /// Bound on the number of nonzero structure constants.
        #[arg(long)]
        max_nonzero: Option<usize>,
    },
    /// Every O-operator with entries from a grid.
    OOperators {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let s = s.trim().to_ascii_lowercase();
    if s == "rational" || s == "q" {
        return Ok(FieldSpec::Rational);
    }
    let p = s.strip_prefix("gf:").or_else(|| s.strip_prefix("gf")).unwrap_or(&s);
    let p: u64 = p.parse().map_err(|_| format!("expected gf:<p> or rational, got {s:?}"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = SearchConfig { budget: cli.budget, workers: cli.workers };
    let load = |path: &PathBuf| Document::load(path);
    let weight = cli.weight.as_deref();
    match &cli.cmd {
        Cmd::Verify { kind, file, strong } => commands::verify(*kind, &Reader::new(&load(file)?, &cli.params, cli.coerce)?, weight, *strong),
        Cmd::Build { kind, file } => commands::build(*kind, &Reader::new(&load(file)?, &cli.params, cli.coerce)?),
        Cmd::Ybe { action: YbeCmd::Check { file, s } } => commands::ybe_check(&Reader::new(&load(file)?, &cli.params, cli.coerce)?, s.as_deref()),
        Cmd::Ybe { action: YbeCmd::Search { file, skew_only, grid } } => {
            commands::ybe_search(&Reader::new(&load(file)?, &cli.params, cli.coerce)?, *skew_only, grid.as_deref(), cfg)
        }
        Cmd::Correspond { kind, file } => commands::correspond(*kind, &Reader::new(&load(file)?, &cli.params, cli.coerce)?, weight),
        Cmd::Factorize { file, vector } => commands::factorize_cmd(&Reader::new(&load(file)?, &cli.params, cli.coerce)?, vector),
        Cmd::Search { what: SearchCmd::Apn { field, dim, max_nonzero } } => commands::search_apn(*field, *dim, *max_nonzero, cfg),
        Cmd::Search { what: SearchCmd::OOperators { file, grid } } => {
            commands::search_operators(&Reader::new(&load(file)?, &cli.params, cli.coerce)?, grid.as_deref(), cfg)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    if let Err(e) = writeln!(out, "{text}") {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            return Err(CliError::Io(e.to_string()));
        }
    }
    if let Some(path) = &cli.json_out {
        std::fs::write(path, format!("{text}\n")).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(out) => (serde_json::to_string_pretty(&out.value).expect("serializes"), if out.passed { 0 } else { 1 }),
        Err(e) => match e.failed_report() {
            Some((what, report)) => {
                let mut v = commands::report_value(&format!("precondition: {what}"), report);
                v["error"] = serde_json::Value::String(e.to_string());
                (serde_json::to_string_pretty(&v).expect("serializes"), 1)
            }
            None => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
