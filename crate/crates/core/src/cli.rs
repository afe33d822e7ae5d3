//! Command-line front end. Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::CatalogCode;
use crate::defining_set::{code_from_defining_set, extract_defining_set, DefiningSet, DefiningSetJson};
use crate::linear_code::{BinaryCode, ENUMERATION_LIMIT};
use crate::report::{self, SuiteOutcome, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "boolcodes", version, about = "Binary linear codes via Boolean functions on GF(2^m)")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Roundtrip,
    #[value(alias = "theorem3")]
    Spectral,
    Bivariate,
    Catalog,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a catalog code (e.g. `golay23`, `bch:n=15,d=5`) or a generator-matrix file.
    Analyze {
        code: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = ENUMERATION_LIMIT as u64, value_parser = clap::value_parser!(u64).range(0..=ENUMERATION_LIMIT as u64))]
        max_k: u64,
    },
    /// Build the generator matrix of the trace code of a defining-set JSON file.
    Build {
        defining_set: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract a defining set from a generator-matrix file.
    Extract {
        matrix: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a randomized or table-driven verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Write the analysis bundle for the classical code families into a directory.
    Openproblems {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = ENUMERATION_LIMIT)]
        max_k: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Runs the tool on process arguments.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Runs the tool on an explicit argument list (first item is the program name).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Analyze { code, format, out, max_k } => analyze(&code, format, out.as_deref(), max_k as usize),
        Command::Build { defining_set, out } => build(&defining_set, out.as_deref()),
        Command::Extract { matrix, out } => extract(&matrix, out.as_deref()),
        Command::Verify { suite, trials } => verify(suite, cli.seed, trials),
        Command::Openproblems { out, max_k } => openproblems(&out, max_k.min(ENUMERATION_LIMIT)),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<BinaryCode, Failure> {
    BinaryCode::parse_matrix(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Writes through a sibling temporary file so readers never see a partial file.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write_atomic(path, contents).map_err(|e| Failure {
            code: EXIT_FAILURE,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn resolve_code(spec: &str) -> Result<(String, BinaryCode), Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok((spec.to_string(), read_matrix(path)?));
    }
    let catalog: CatalogCode = spec.parse().map_err(|e| usage(format!("{spec:?}: {e}")))?;
    let code = catalog.build().map_err(|e| usage(format!("{spec:?}: {e}")))?;
    Ok((catalog.to_string(), code))
}

fn analyze(spec: &str, format: Format, out: Option<&Path>, max_k: usize) -> Result<i32, Failure> {
    let (label, code) = resolve_code(spec)?;
    let report = report::analyze(&label, &code, max_k);
    if let Some(diag) = &report.diagnostic {
        eprintln!("warning: code is not projective ({diag}); spectral analysis skipped");
    }
    let text = match format {
        Format::Json => to_json(&report),
        Format::Csv => report.to_csv(),
    };
    emit(out, &text)?;
    Ok(if report.weight_distribution.verdict == Verdict::Different { EXIT_FAILURE } else { EXIT_OK })
}

fn build(path: &Path, out: Option<&Path>) -> Result<i32, Failure> {
    let json: DefiningSetJson =
        serde_json::from_str(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let set = DefiningSet::from_json(&json).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    if set.has_duplicates() {
        eprintln!("warning: defining set has repeated elements; the code is not projective");
    }
    let code = code_from_defining_set(&set);
    emit(out, &code.to_matrix_string())?;
    eprintln!("[{}, {}]", code.len(), code.dimension());
    Ok(EXIT_OK)
}

fn extract(path: &Path, out: Option<&Path>) -> Result<i32, Failure> {
    let code = read_matrix(path)?;
    let set = extract_defining_set(&code).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    emit(out, &to_json(&set.to_json()))?;
    Ok(EXIT_OK)
}

fn verify(suite: Suite, seed: u64, trials: Option<usize>) -> Result<i32, Failure> {
    let internal = |e: crate::Error| Failure { code: EXIT_FAILURE, message: e.to_string() };
    let outcome: SuiteOutcome = match suite {
        Suite::Roundtrip => report::verify_roundtrip(seed, trials.unwrap_or(500)),
        Suite::Spectral => {
            report::verify_spectral(seed, trials.unwrap_or(1000), &[6], ENUMERATION_LIMIT).map_err(internal)?
        }
        Suite::Bivariate => report::verify_bivariate(seed, trials.unwrap_or(100), &[2, 4, 6]).map_err(internal)?,
        Suite::Catalog => report::verify_catalog(ENUMERATION_LIMIT).map_err(internal)?,
    };
    for failure in &outcome.failures {
        eprintln!("FAIL {failure}");
    }
    let status = if outcome.passed() { "PASS" } else { "FAIL" };
    println!("{} {}: {} cases, {} failures", status, outcome.suite, outcome.cases, outcome.failures.len());
    Ok(if outcome.passed() { EXIT_OK } else { EXIT_FAILURE })
}

fn openproblems(dir: &Path, max_k: usize) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure { code: EXIT_FAILURE, message: format!("{}: {e}", dir.display()) };
    fs::create_dir_all(dir).map_err(io)?;
    let reports = report::study_reports(max_k).map_err(|e| Failure { code: EXIT_FAILURE, message: e.to_string() })?;
    for fam in &reports {
        let name = format!("problem{}_{}.json", fam.problem, fam.family);
        write_atomic(&dir.join(name), &to_json(fam)).map_err(io)?;
    }
    let rows = report::summary_rows(&reports);
    write_atomic(&dir.join("summary.json"), &to_json(&rows)).map_err(io)?;
    write_atomic(&dir.join("summary.csv"), &report::summary_csv(&rows)).map_err(io)?;
    let different = rows.iter().filter(|r| r.verdict == Verdict::Different).count();
    println!("{} instances in {} families written to {}", rows.len(), reports.len(), dir.display());
    Ok(if different == 0 { EXIT_OK } else { EXIT_FAILURE })
}
