//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input or verification failure, 2 state budget
//! exhausted.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::bounds;
use crate::construct::{family_2x2, represent, ConstructionResult, Family2x2, DEFAULT_BASE};
use crate::error::{Error, Result};
use crate::exponent::{exponent_semigroup, StateBudget};
use crate::fixtures::{bundled, load_dir, verify_all};
use crate::integrality::{integral_similarity, quick_reject, tfae_report};
use crate::interchange::{
    analysis_to_value, bounds_to_value, construction_to_value, matrix_from_value,
    semigroup_to_value, similarity_to_value, tfae_to_value,
};
use crate::matrix::RationalMatrix;
use crate::semigroup::{SemigroupKind, SubsemigroupDesc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "exposg", version, about = "Exponent semigroups of rational matrices")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest k for the tr(A^k) integrality check (default 2·dim)
    #[arg(long, global = true)]
    trace_bound: Option<u64>,

    /// Maximum number of residue states explored
    #[arg(long, global = true, default_value_t = 1_000_000)]
    state_budget: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Human,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Operations on a matrix file
    #[command(subcommand)]
    Matrix(MatrixCommand),
    /// Operations on a semigroup given by generators
    #[command(subcommand)]
    Semigroup(SemigroupCommand),
    /// Build a matrix whose exponent semigroup is generated by the given numbers
    Construct {
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        generators: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_BASE, allow_negative_numbers = true)]
        base: i64,
        #[arg(long, value_enum, default_value_t = FamilyChoice::Auto)]
        family: FamilyChoice,
        /// Write the result here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the bundled reference matrices
    VerifyFixtures {
        /// Read fixtures from this directory instead
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyChoice {
    Auto,
    Nilpotent,
    #[value(name = "2x2")]
    TwoByTwo,
}

#[derive(Args, Debug)]
struct MatrixInput {
    /// Matrix JSON file, or `-` for stdin
    file: Option<PathBuf>,
    /// Matrix JSON given directly
    #[arg(long, conflicts_with = "file")]
    inline: Option<String>,
}

#[derive(Subcommand, Debug)]
enum MatrixCommand {
    /// Power-integrality report and exponent semigroup
    Analyze(MatrixInput),
    /// Power-integrality report only
    PowerIntegral(MatrixInput),
    /// Integral similarity A = S·B·S⁻¹
    SimilarIntegral(MatrixInput),
}

#[derive(Subcommand, Debug)]
enum SemigroupCommand {
    /// Invariants of the semigroup
    Info {
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        generators: Vec<u64>,
    },
    /// Bounds on the matricial dimension
    Bounds {
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        generators: Vec<u64>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_FAILURE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Error::StateBudgetExceeded { states, partial }) => {
            let _ = writeln!(err, "error: state budget exhausted after {states} states");
            let _ = emit(out, cli.format, &json!({ "exponent": analysis_to_value(&partial) }), || {
                format!("partial result after {states} states: {}", partial.classification)
            });
            EXIT_BUDGET
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, value: &Value, human: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value)?)?,
        Format::Human => writeln!(out, "{}", human())?,
    }
    Ok(())
}

fn load_matrix(input: &MatrixInput) -> Result<RationalMatrix> {
    let text = match (&input.inline, &input.file) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
        (None, Some(p)) => std::fs::read_to_string(p)?,
        (None, None) => return Err(Error::Parse("no matrix given; pass a file or --inline".into())),
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    // construction output carries the matrix under "matrix"
    match value.get("matrix") {
        Some(inner) if value.get("dim").is_none() => matrix_from_value(inner),
        _ => matrix_from_value(&value),
    }
}

fn semigroup(gens: &[u64]) -> Result<SubsemigroupDesc> {
    let gens: Vec<u64> = gens.iter().copied().filter(|&g| g != 0).collect();
    if gens.is_empty() {
        Ok(SubsemigroupDesc::trivial())
    } else {
        SubsemigroupDesc::from_generators(&gens)
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let budget = StateBudget::states(cli.state_budget);
    let trace_bound = |a: &RationalMatrix| cli.trace_bound.unwrap_or(2 * a.dim() as u64);
    match &cli.command {
        Command::Matrix(MatrixCommand::Analyze(input)) => {
            let a = load_matrix(input)?;
            let report = tfae_report(&a, trace_bound(&a));
            let quick = quick_reject(&a);
            let analysis = exponent_semigroup(&a, budget)?;
            let value = json!({
                "dim": a.dim(),
                "quick_reject": quick.as_ref().map(|w| w.to_string()),
                "power_integrality": tfae_to_value(&report),
                "exponent": analysis_to_value(&analysis),
            });
            emit(out, cli.format, &value, || {
                let mut s = format!("S(A) = {}\n", analysis.classification);
                s += &format!("characteristic polynomial: {}\n", report.char_poly);
                s += &format!("integral characteristic polynomial: {}", report.verdict);
                if let (Some(t), Some(r)) = (analysis.preperiod, analysis.period) {
                    s += &format!("\npreperiod {t}, period {r}");
                }
                if let Some(w) = quick {
                    s += &format!("\nno integral powers: {w}");
                }
                s
            })?;
            Ok(EXIT_OK)
        }
        Command::Matrix(MatrixCommand::PowerIntegral(input)) => {
            let a = load_matrix(input)?;
            let report = tfae_report(&a, trace_bound(&a));
            emit(out, cli.format, &tfae_to_value(&report), || {
                let mut s = format!("characteristic polynomial: {}\nverdict: {}", report.char_poly, report.verdict);
                for w in &report.witnesses {
                    s += &format!("\nwitness: {w}");
                }
                s
            })?;
            Ok(EXIT_OK)
        }
        Command::Matrix(MatrixCommand::SimilarIntegral(input)) => {
            let a = load_matrix(input)?;
            let sim = integral_similarity(&a)?;
            emit(out, cli.format, &similarity_to_value(&sim), || {
                format!("S =\n{}\nB =\n{}", sim.s.to_rational(), sim.b.to_rational())
            })?;
            Ok(EXIT_OK)
        }
        Command::Semigroup(SemigroupCommand::Info { generators }) => {
            let s = semigroup(generators)?;
            emit(out, cli.format, &semigroup_to_value(&s), || s.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Semigroup(SemigroupCommand::Bounds { generators }) => {
            let s = semigroup(generators)?;
            let b = bounds(&s);
            emit(out, cli.format, &bounds_to_value(&b), || {
                let mut text = format!("{s}\nmatricial dimension in [{}, {}]", b.lower, b.upper);
                for j in &b.justifications {
                    text += &format!("\n  {:?} {:?} {}: {}", j.side, j.rule, j.value, j.cite);
                }
                text
            })?;
            Ok(EXIT_OK)
        }
        Command::Construct { generators, base, family, output } => {
            let s = semigroup(generators)?;
            let result = construct(&s, *base, *family)?;
            let value = construction_to_value(&result);
            match output {
                Some(path) => std::fs::write(path, serde_json::to_string_pretty(&value)? + "\n")?,
                None => emit(out, cli.format, &value, || {
                    format!("{}×{} matrix, verified: {}\n{}", result.matrix.dim(), result.matrix.dim(), result.verified, result.matrix)
                })?,
            }
            Ok(if result.verified { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::VerifyFixtures { dir } => {
            let fixtures = match dir {
                Some(d) => load_dir(d)?,
                None => bundled(),
            };
            let outcomes = verify_all(&fixtures, budget);
            let passed = outcomes.iter().filter(|o| o.passed()).count();
            let rows: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "name": o.name,
                        "expected": o.expected.minimal_generators(),
                        "computed": o.computed.as_ref().map(|c| json!(c.minimal_generators())).unwrap_or_else(|e| json!(e)),
                        "pass": o.passed(),
                    })
                })
                .collect();
            let value = json!({ "passed": passed, "total": outcomes.len(), "fixtures": rows });
            emit(out, cli.format, &value, || {
                let mut s = String::new();
                for o in &outcomes {
                    let computed = match &o.computed {
                        Ok(c) => c.to_string(),
                        Err(e) => format!("error: {e}"),
                    };
                    s += &format!("{} {:<14} expected {}  computed {}\n", if o.passed() { "PASS" } else { "FAIL" }, o.name, o.expected, computed);
                }
                s + &format!("{passed}/{} pass", outcomes.len())
            })?;
            Ok(if passed == outcomes.len() { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

fn construct(s: &SubsemigroupDesc, base: i64, family: FamilyChoice) -> Result<ConstructionResult> {
    if s.kind() == SemigroupKind::Trivial {
        return crate::construct::trivial_representation();
    }
    match family {
        FamilyChoice::Nilpotent => represent(s, base),
        FamilyChoice::TwoByTwo => match Family2x2::detect(s) {
            Some(f) => family_2x2(f),
            None => Err(Error::InvalidParameter(format!("{s} has no closed-form 2×2 representation"))),
        },
        FamilyChoice::Auto => match Family2x2::detect(s) {
            Some(f) => family_2x2(f),
            None => represent(s, base),
        },
    }
}

