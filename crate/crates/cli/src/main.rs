use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use structura::json::{self as sj, TOOL, VERSION};
use structura::structure::{extract_poly_structure, extract_rational_structure, verify, Realization};
use structura::synth::{admissible_minor_pairs, check_feasibility, complement_bound, construct, select_nonzero_minor, SearchConfig};
use structura::{matrix::minor, Error};

#[derive(Parser)]
#[command(name = "structura", version, about = "Structural analysis and synthesis of polynomial and rational matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract the full structural data of a matrix.
    Analyze {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Test a prescription against the existence conditions.
    Check {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a matrix realizing a prescription.
    Construct {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Rotates the candidate order in the completion search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        no_verify: bool,
    },
    /// Compare the structure of a matrix with a prescription.
    Verify { matrix: PathBuf, prescription: PathBuf },
    /// Pick rows and columns of a nonzero minor within the index bounds.
    MinorSelect {
        matrix: PathBuf,
        /// Column bound, comma separated and 1-based.
        #[arg(long)]
        z: String,
        /// Also list every admissible pair.
        #[arg(long)]
        brute: bool,
    },
}

/// An error message with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

/// Exit codes: 1 infeasible or failed check, 2 bad input, 3 field not split,
/// 4 search exhausted, 5 internal identity failure.
fn code_of(e: &Error) -> u8 {
    match e {
        Error::Infeasible(_) | Error::MajorizationFails | Error::SingularInput => 1,
        Error::FieldNotSplit(_) => 3,
        Error::SearchExhausted(_) | Error::CompletionSearchExhausted(_) => 4,
        Error::IdentityViolated(_) => 5,
        _ => 2,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match &e {
            Error::FieldNotSplit(_) => format!(
                "{e}\nthe construction assumes an algebraically closed field; over the rationals every invariant factor must split into linear factors"
            ),
            Error::SearchExhausted(_) => format!("{e}\nraise the budget with STRUCTURA_MAX_SEARCH"),
            _ => e.to_string(),
        };
        Failure::new(code_of(&e), message)
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))?;
    Ok(sj::parse_text(&text)?)
}

fn emit(v: &Value, output: Option<&Path>) -> Result<(), Failure> {
    let text = sj::to_text(v);
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::new(2, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn analyze(input: &Path, output: Option<&Path>) -> Result<u8, Failure> {
    let v = read_json(input)?;
    let report = match sj::matrix_from_json(sj::unwrap_matrix(&v))? {
        Realization::Poly(p) => sj::poly_structure_report(&extract_poly_structure(&p)?),
        Realization::Rational(r) => sj::rational_structure_report(&extract_rational_structure(&r)?),
    };
    emit(&report, output)?;
    Ok(0)
}

fn check(input: &Path, output: Option<&Path>) -> Result<u8, Failure> {
    let p = sj::prescription_from_json(&read_json(input)?)?;
    let report = check_feasibility(&p)?;
    emit(&sj::feasibility_report_json(&report), output)?;
    if report.feasible {
        Ok(0)
    } else {
        let failing: Vec<&str> = report.failing().iter().map(|c| c.label()).collect();
        eprintln!("infeasible: failing {}", failing.join(", "));
        Ok(1)
    }
}

fn run_construct(input: &Path, output: Option<&Path>, seed: u64, no_verify: bool) -> Result<u8, Failure> {
    let p = sj::prescription_from_json(&read_json(input)?)?;
    let matrix = construct(&p, SearchConfig::from_env(seed), false)?;
    let report = if no_verify { None } else { Some(verify(&matrix, &p)?) };
    emit(&sj::construction_json(&p, &matrix, seed, report.as_ref()), output)?;
    match report {
        Some(r) if !r.pass => Err(Failure::new(5, "constructed matrix failed verification")),
        _ => Ok(0),
    }
}

fn run_verify(matrix: &Path, prescription: &Path) -> Result<u8, Failure> {
    let m = read_json(matrix)?;
    let a = sj::matrix_from_json(sj::unwrap_matrix(&m))?;
    let p = sj::prescription_from_json(&read_json(prescription)?)?;
    let report = verify(&a, &p)?;
    emit(&sj::verify_report_json(&report), None)?;
    Ok(if report.pass { 0 } else { 1 })
}

fn parse_z(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::new(2, format!("bad index {t:?} in --z"))))
        .collect()
}

fn minor_select(matrix: &Path, z: &str, brute: bool) -> Result<u8, Failure> {
    let e = sj::poly_matrix_from_json(sj::unwrap_matrix(&read_json(matrix)?))?;
    let z = parse_z(z)?;
    let (rows, cols) = select_nonzero_minor(&e, &z)?;
    let zero = |xs: &[usize]| xs.iter().map(|x| x - 1).collect::<Vec<_>>();
    let value = minor(&e, &zero(&rows), &zero(&cols));
    let mut report = json!({
        "tool": TOOL,
        "version": VERSION,
        "kind": "minor_selection",
        "z": z,
        "z_star": complement_bound(&z, e.rows()),
        "rows": rows,
        "cols": cols,
        "minor": sj::poly_to_json(&value),
    });
    if brute {
        let pairs = admissible_minor_pairs(&e, &z)?;
        let listed: Vec<Value> = pairs.iter().map(|(i, j)| json!({ "rows": i, "cols": j })).collect();
        report["admissible"] = Value::Array(listed);
        report["selection_admissible"] = json!(pairs.contains(&(rows, cols)));
    }
    emit(&report, None)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { input, output } => analyze(input, output.as_deref()),
        Command::Check { input, output } => check(input, output.as_deref()),
        Command::Construct { input, output, seed, no_verify } => run_construct(input, output.as_deref(), *seed, *no_verify),
        Command::Verify { matrix, prescription } => run_verify(matrix, prescription),
        Command::MinorSelect { matrix, z, brute } => minor_select(matrix, z, *brute),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
