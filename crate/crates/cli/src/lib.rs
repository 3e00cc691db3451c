//! Argument parsing and dispatch for the `cobound` binary.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use cobound::verify::{run_all, run_criterion, CRITERION_COUNT};
use cobound::{
    alexander_polynomial, bound_report, lt_profile, seifert_matrix, sweep, sweep_csv, torus_lt_signature,
    torus_signature, BoundConfig, BraidWord, RationalAngle,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cobound",
    version,
    about = "Torus knot signatures and cobordism distance bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classical signature of T(p,q).
    Sig {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
    },
    /// Levine-Tristram signature of T(p,q) at ω = e^{2πit}.
    Ltsig {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
        /// Angle as NUM/DEN, strictly between 0 and 1.
        #[arg(short)]
        t: String,
    },
    /// Jump profile of the signature function of T(p,q), as CSV.
    Profile {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
    },
    /// Seifert matrix of a braid closure.
    Seifert {
        /// Braid word "n: e1 e2 ...".
        #[arg(short)]
        w: String,
    },
    /// Alexander polynomial of a braid closure.
    Alex {
        #[arg(short)]
        w: String,
    },
    /// Bound report for d(T(m,m+1), T(k,N)) as JSON.
    Bound {
        #[arg(short)]
        m: u64,
        #[arg(short)]
        k: u64,
        #[arg(short = 'N')]
        big_n: u64,
        /// Twist constant c_k.
        #[arg(long, default_value_t = 2)]
        ck: i64,
    },
    /// Bound reports over a range of m at the smallest admissible N, with a fitted envelope.
    Sweep {
        #[arg(short)]
        k: u64,
        /// Inclusive range A..B.
        #[arg(long, value_parser = parse_range)]
        m_range: RangeInclusive<u64>,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance checks.
    Verify {
        /// Run only this criterion.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=CRITERION_COUNT as i64))]
        only: Option<u8>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let parse = |v: &str| v.trim().parse::<u64>().map_err(|e| format!("{v:?}: {e}"));
    let (a, b) = (parse(a)?, parse(b)?);
    if a == 0 || a > b {
        return Err(format!("range {a}..{b} must be nonempty and start at 1 or more"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(String),
    Verify,
}

impl From<cobound::Error> for Failure {
    fn from(e: cobound::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn parse_word(w: &str) -> Result<BraidWord, Failure> {
    Ok(w.parse()?)
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Sig { p, q } => writeln!(out, "{}", torus_signature(p, q)?)?,
        Command::Ltsig { p, q, t } => {
            let t: RationalAngle = t.parse()?;
            writeln!(out, "{}", torus_lt_signature(p, q, t)?)?;
        }
        Command::Profile { p, q } => write!(out, "{}", lt_profile(p, q)?.to_csv())?,
        Command::Seifert { w } => write!(out, "{}", seifert_matrix(&parse_word(&w)?))?,
        Command::Alex { w } => writeln!(out, "{}", alexander_polynomial(&seifert_matrix(&parse_word(&w)?)))?,
        Command::Bound { m, k, big_n, ck } => {
            let report = bound_report(m, k, big_n, &BoundConfig::with_ck(ck))?;
            let json = serde_json::to_string_pretty(&report).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{json}")?;
        }
        Command::Sweep { k, m_range, out: path } => {
            let (rows, (a, b)) = sweep(k, m_range, &BoundConfig::default())?;
            let csv = sweep_csv(&rows);
            match path {
                Some(path) => std::fs::write(&path, csv)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
                None => write!(out, "{csv}")?,
            }
            writeln!(out, "a = {a}, b = {b}")?;
        }
        Command::Verify { only } => {
            let reports = match only {
                Some(id) => run_criterion(id).into_iter().collect(),
                None => run_all(),
            };
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}
