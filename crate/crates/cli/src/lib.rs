//! Command-line front end for `flaghorn`.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a well-formed
//! negative verdict, 2 for usage and domain errors.

pub mod document;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flaghorn::factor::factor_full;
use flaghorn::levi::{enumerate_levi_movable, is_levi_movable};
use flaghorn::oracle::intersection_number;
use flaghorn::perm::{format_tuple, parse_tuple};
use flaghorn::verify::run_suite;
use flaghorn::{FlagType, Method, Permutation, Suite, SuiteReport, TupleOrder};

pub use document::{Coefficient, Conditions, Document, FactorNode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "flaghorn",
    version,
    about = "Levi-movability and structure constants on partial flag varieties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List Levi-movable s-tuples with their intersection numbers.
    Enumerate {
        #[command(flatten)]
        flag: FlagArg,
        /// Tuple size.
        #[arg(long = "s")]
        s: usize,
        /// List each tuple once, sorted, instead of every ordering.
        #[arg(long)]
        unordered: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide Levi-movability of a tuple.
    Check {
        #[command(flatten)]
        input: TupleArgs,
        /// via_iii, via_i, via_iv or cross_check.
        #[arg(long, default_value = "via_iii")]
        method: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Intersection number of a complementary tuple.
    Coeff {
        #[command(flatten)]
        input: TupleArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Factor the intersection number of a Levi-movable tuple.
    Factor {
        #[command(flatten)]
        input: TupleArgs,
        /// Check every level against the polynomial oracle.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run exhaustive verification suites.
    Verify {
        /// thm1, thm2, cor13, lengths, lr-oracle, duality or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Skip flag varieties with larger ambient dimension.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct FlagArg {
    /// Flag type "a1,...,ar/n", e.g. "1,2/4".
    #[arg(long)]
    pub flag: String,
}

#[derive(Args, Debug)]
pub struct TupleArgs {
    #[command(flatten)]
    pub flag: FlagArg,
    /// Permutations in one-line notation separated by ';', e.g. "2,3,1;2,1,3".
    #[arg(long)]
    pub tuple: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Errors that end a command with [`EXIT_ERROR`].
#[derive(Debug)]
pub struct CliError(pub String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Enumerate {
            flag,
            s,
            unordered,
            format,
        } => cmd_enumerate(&parse_flag(&flag)?, s, unordered, format, out),
        Command::Check {
            input,
            method,
            format,
        } => {
            let (flag, tuple) = parse_input(&input)?;
            cmd_check(&flag, &tuple, method.parse()?, format, out)
        }
        Command::Coeff { input, format } => {
            let (flag, tuple) = parse_input(&input)?;
            cmd_coeff(&flag, &tuple, format, out)
        }
        Command::Factor {
            input,
            verify,
            format,
        } => {
            let (flag, tuple) = parse_input(&input)?;
            cmd_factor(&flag, &tuple, verify, format, out)
        }
        Command::Verify { suite, max_n, format } => cmd_verify(&suite, max_n, format, out),
    }
}

fn parse_flag(arg: &FlagArg) -> CliResult<FlagType> {
    Ok(arg.flag.parse()?)
}

fn parse_input(args: &TupleArgs) -> CliResult<(FlagType, Vec<Permutation>)> {
    let flag = parse_flag(&args.flag)?;
    let tuple = parse_tuple(&args.tuple)?;
    Ok((flag, tuple))
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

fn opt(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

pub fn cmd_enumerate(
    flag: &FlagType,
    s: usize,
    unordered: bool,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    if s < 2 {
        return Err(CliError(format!("--s must be at least 2, got {s}")));
    }
    let order = if unordered {
        TupleOrder::Unordered
    } else {
        TupleOrder::Ordered
    };
    let found = enumerate_levi_movable(flag, s, order)?;
    match format {
        Format::Text => {
            for m in &found {
                writeln!(out, "{}\t{}", format_tuple(&m.tuple), m.coefficient)?;
            }
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["flag", "tuple", "coefficient"])?;
            for m in &found {
                w.write_record([
                    flag.to_string(),
                    format_tuple(&m.tuple),
                    m.coefficient.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let docs = found
                .iter()
                .map(|m| {
                    let mut doc = Document::new(&m.tuple, flag)?;
                    doc.movable = Some(true);
                    doc.method = Some(Method::default().to_string());
                    doc.conditions.iii = Some(true);
                    doc.coefficient = Some(m.coefficient.clone().into());
                    Ok(doc)
                })
                .collect::<flaghorn::Result<Vec<_>>>()?;
            serde_json::to_writer_pretty(&mut *out, &docs)?;
            writeln!(out)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_check(
    flag: &FlagType,
    tuple: &[Permutation],
    method: Method,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let report = is_levi_movable(tuple, flag, method)?;
    let doc = Document::from_report(&report)?;
    match format {
        Format::Text => {
            let verdict = if report.movable { "movable" } else { "not movable" };
            writeln!(
                out,
                "{verdict} ({} in {flag}, method {method})",
                format_tuple(tuple)
            )?;
            for (name, value) in [
                ("i", report.condition_i),
                ("iii", report.condition_iii),
                ("iv", report.condition_iv),
            ] {
                if let Some(v) = value {
                    writeln!(out, "condition ({name}): {v}")?;
                }
            }
            if let Some(c) = &report.coefficient {
                writeln!(out, "coefficient: {c}")?;
            }
            if let Some(why) = &report.failing_witness {
                writeln!(out, "witness: {why}")?;
            }
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "flag",
                "tuple",
                "method",
                "movable",
                "i",
                "iii",
                "iv",
                "coefficient",
                "witness",
            ])?;
            w.write_record([
                flag.to_string(),
                format_tuple(tuple),
                method.to_string(),
                report.movable.to_string(),
                opt(report.condition_i),
                opt(report.condition_iii),
                opt(report.condition_iv),
                report
                    .coefficient
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
                report.failing_witness.clone().unwrap_or_default(),
            ])?;
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(if report.movable { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn cmd_coeff(
    flag: &FlagType,
    tuple: &[Permutation],
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let c = intersection_number(tuple, flag)?;
    match format {
        Format::Text => writeln!(out, "{c}")?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["flag", "tuple", "coefficient"])?;
            w.write_record([flag.to_string(), format_tuple(tuple), c.to_string()])?;
            w.flush()?;
        }
        Format::Json => {
            let mut doc = Document::new(tuple, flag)?;
            doc.coefficient = Some(c.into());
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_factor(
    flag: &FlagType,
    tuple: &[Permutation],
    verify: bool,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let tree = factor_full(tuple, flag, verify)?;
    let node = FactorNode::from_tree(&tree);
    match format {
        Format::Text => {
            writeln!(
                out,
                "c = {} for ({}) in {flag}",
                tree.coefficient,
                format_tuple(tuple)
            )?;
            for (depth, level) in node.levels().into_iter().enumerate() {
                let (k, m) = level.grassmannian.split_once('/').unwrap_or_default();
                writeln!(
                    out,
                    "{}Gr({k},{m}): ({}) -> {}",
                    "  ".repeat(depth + 1),
                    level.partitions.join(") · ("),
                    level.coefficient
                )?;
            }
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["level", "grassmannian", "partitions", "coefficient"])?;
            for (depth, level) in node.levels().into_iter().enumerate() {
                w.write_record([
                    (depth + 1).to_string(),
                    level.grassmannian.clone(),
                    level.partitions.join(";"),
                    level.coefficient.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let mut doc = Document::new(tuple, flag)?;
            doc.movable = Some(true);
            doc.method = Some(Method::default().to_string());
            doc.conditions.iii = Some(true);
            doc.coefficient = Some(tree.coefficient.clone().into());
            doc.factorization = Some(node);
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(suite: &str, max_n: Option<usize>, format: Format, out: &mut dyn Write) -> CliResult<i32> {
    let suites: Vec<Suite> = if suite.trim().eq_ignore_ascii_case("all") {
        Suite::ALL.to_vec()
    } else {
        suite
            .split(',')
            .map(str::parse)
            .collect::<flaghorn::Result<_>>()?
    };
    let reports = suites
        .into_iter()
        .map(|s| run_suite(s, max_n))
        .collect::<flaghorn::Result<Vec<SuiteReport>>>()?;
    match format {
        Format::Text => {
            for r in &reports {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                writeln!(
                    out,
                    "{}: {verdict} ({} checks, {} failures)",
                    r.suite,
                    r.checked,
                    r.failures.len()
                )?;
                for f in &r.failures {
                    writeln!(out, "  {f}")?;
                }
            }
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["suite", "checked", "failures", "passed"])?;
            for r in &reports {
                w.write_record([
                    r.suite.to_string(),
                    r.checked.to_string(),
                    r.failures.len().to_string(),
                    r.passed().to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let value: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "suite": r.suite.to_string(),
                        "checked": r.checked,
                        "passed": r.passed(),
                        "failures": r.failures,
                    })
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &value)?;
            writeln!(out)?;
        }
    }
    Ok(if reports.iter().all(SuiteReport::passed) {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}
