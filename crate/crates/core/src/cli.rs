//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
//! Results go to standard output (or `--out PATH`), diagnostics to standard
//! error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_traits::One;

use crate::convergents;
use crate::error::Error;
use crate::exactnum::BigInt;
use crate::identities::{run_all, IdentityReport, Suite};
use crate::output::{render, OutputFormat};
use crate::recurrences::{sequence_prefix, RecurrenceSpec, SequenceId};
use crate::triangular::{enumerate_solutions, prefix_average, triangular, witness};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Above this many terms `gen` warns about output size.
pub const LARGE_OUTPUT_TERMS: u64 = 1_000_000;

/// Failure lines shown under each failing report.
const MAX_FAILURE_LINES: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "triavg", version, about = "Triangular-average sequences: generate, verify, solve")]
struct Cli {
    /// Write results to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the first terms of a sequence: a, b, u, v, L, F, z or custom.
    Gen(GenArgs),
    /// Check the identities and congruences over 0..=max-n.
    Verify(VerifyArgs),
    /// Brute-force every s <= max-s whose triangular prefix average is triangular.
    Solve(SolveArgs),
    /// Verify that the average of the first b_n triangular numbers is T_{a_n}.
    Witness(WitnessArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_parser = parse_target)]
    seq: Target,

    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,

    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    /// Forcing constant of a custom recurrence.
    #[arg(long, allow_negative_numbers = true, value_parser = parse_bigint)]
    k: Option<BigInt>,

    #[arg(long, allow_negative_numbers = true, value_parser = parse_bigint)]
    w0: Option<BigInt>,

    #[arg(long, allow_negative_numbers = true, value_parser = parse_bigint)]
    w1: Option<BigInt>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// A suite name, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: SuiteChoice,

    #[arg(long = "max-n", default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long = "max-s", value_parser = parse_positive_bigint)]
    max_s: BigInt,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    n: u64,
}

#[derive(Clone, Debug)]
enum Target {
    Named(SequenceId),
    Z,
    Custom,
}

#[derive(Clone, Debug)]
enum SuiteChoice {
    All,
    One(Suite),
}

fn parse_target(s: &str) -> Result<Target, String> {
    match s {
        "z" => Ok(Target::Z),
        "custom" => Ok(Target::Custom),
        _ => SequenceId::from_letter(s)
            .map(Target::Named)
            .ok_or_else(|| format!("unknown sequence `{s}` (expected a, b, u, v, L, F, z or custom)")),
    }
}

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice::All);
    }
    s.parse::<Suite>().map(SuiteChoice::One).map_err(|_| {
        let names: Vec<_> = Suite::ALL_SUITES.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}` (expected all, {})", names.join(", "))
    })
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s).map_err(|_| format!("`{s}` is not an integer"))
}

fn parse_positive_bigint(s: &str) -> Result<BigInt, String> {
    let v = parse_bigint(s)?;
    if v < BigInt::one() {
        return Err(format!("`{s}` must be at least 1"));
    }
    Ok(v)
}

/// Outcome of one command: text for the output sink, and an exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(m) => CliError::Usage(m),
            e @ Error::Inconsistent(_) => CliError::Failed(e.to_string()),
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };

    let outcome = match &cli.command {
        Command::Gen(args) => cmd_gen(args, stderr),
        Command::Verify(args) => cmd_verify(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Witness(args) => cmd_witness(args),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            return EXIT_USAGE;
        }
        Err(CliError::Failed(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            return EXIT_FAILED;
        }
    };

    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(m) = written {
        let _ = writeln!(stderr, "error: cannot write output: {m}");
        return EXIT_FAILED;
    }
    outcome.code
}

fn cmd_gen(args: &GenArgs, stderr: &mut dyn Write) -> Result<Outcome, CliError> {
    if args.count > LARGE_OUTPUT_TERMS {
        let _ = writeln!(stderr, "warning: {} terms requested; output will be very large", args.count);
    }
    let count = usize::try_from(args.count).map_err(|_| CliError::Usage("count too large".into()))?;
    let custom_flags = args.k.is_some() || args.w0.is_some() || args.w1.is_some();
    let (values, header) = match &args.seq {
        Target::Z => {
            let header = "z: numerators of continued fraction convergents to sqrt(3), offset 0".to_string();
            (convergents::numerators(count)?, header)
        }
        Target::Named(id) => {
            if custom_flags {
                return Err(CliError::Usage("--k/--w0/--w1 only apply to `custom`".into()));
            }
            let header = format!("{id}, offset 0");
            (sequence_prefix(id, count)?, header)
        }
        Target::Custom => {
            let (Some(k), Some(w0), Some(w1)) = (&args.k, &args.w0, &args.w1) else {
                return Err(CliError::Usage("`custom` requires --k, --w0 and --w1".into()));
            };
            let id = SequenceId::Custom(RecurrenceSpec::new(k.clone(), w0.clone(), w1.clone()));
            let header = format!("{id}, offset 0");
            (sequence_prefix(&id, count)?, header)
        }
    };
    Ok(Outcome::ok(render(&values, 0, args.format, &header)))
}

fn describe(report: &IdentityReport, text: &mut String) {
    writeln!(text, "{report}").unwrap();
    for f in report.failures.iter().take(MAX_FAILURE_LINES) {
        writeln!(text, "  n={}: {}: {} != {}", f.n, f.relation, f.lhs, f.rhs).unwrap();
    }
    if report.failures.len() > MAX_FAILURE_LINES {
        writeln!(text, "  ... {} more", report.failures.len() - MAX_FAILURE_LINES).unwrap();
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let reports = match args.suite {
        SuiteChoice::All => run_all(args.max_n)?,
        SuiteChoice::One(suite) => vec![suite.run(args.max_n)?],
    };
    let mut text = String::new();
    for r in &reports {
        describe(r, &mut text);
    }
    let code = if reports.iter().all(IdentityReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok(Outcome { text, code })
}

fn cmd_solve(args: &SolveArgs) -> Result<Outcome, CliError> {
    let found = enumerate_solutions(&args.max_s)?;

    // (b_n, a_n) pairs from the recurrences, keyed by b_n
    let mut expected = BTreeMap::new();
    let b = SequenceId::B.spec();
    let a = SequenceId::A.spec();
    for (n, (bn, an)) in b.terms().zip(a.terms()).enumerate().skip(1) {
        if bn > args.max_s {
            break;
        }
        expected.insert(bn, (n, an));
    }

    let mut text = String::from("# s r average match\n");
    let mut all_good = found.len() == expected.len();
    for (s, r) in &found {
        let avg = prefix_average(s)?;
        let avg_ok = avg.is_integer() && avg.to_integer() == triangular(r)?;
        let flag = match expected.get(s) {
            Some((n, an)) if an == r && avg_ok => format!("(b_{n}, a_{n})"),
            _ => {
                all_good = false;
                "MISMATCH".to_string()
            }
        };
        writeln!(text, "{s} {r} {avg} {flag}").unwrap();
    }
    if all_good {
        writeln!(text, "# {} solutions, all equal to (b_n, a_n)", found.len()).unwrap();
        Ok(Outcome::ok(text))
    } else {
        writeln!(text, "# FAIL: brute-force solutions differ from the recurrence pairs").unwrap();
        Ok(Outcome { text, code: EXIT_FAILED })
    }
}

fn cmd_witness(args: &WitnessArgs) -> Result<Outcome, CliError> {
    if args.n == 0 {
        return Err(CliError::Usage(
            "b_0 = -1 is not a valid prefix length; n must be at least 1".into(),
        ));
    }
    let w = witness(args.n)?;
    if !w.verify() {
        return Err(CliError::Failed(format!("witness for n={} failed re-verification", args.n)));
    }
    let text = format!(
        "n = {}\nb = {}\nsum = {}\navg = {}\na = {}\nVERIFIED\n",
        w.n, w.s, w.sum, w.avg, w.r
    );
    Ok(Outcome::ok(text))
}
