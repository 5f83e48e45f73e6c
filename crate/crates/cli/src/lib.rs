//! Command-line front end for `digamma-zeros`.
//!
//! Subcommands write CSV or JSON tables of zeros, identity checks and
//! hyperfactorial extrema, plus an aggregate JSON verification report.
//! Exit codes: 0 success, 1 computation failure or failed check, 2 invalid
//! arguments.

pub mod cache;
pub mod output;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use digamma_zeros::hyperfactorial::{find_negative_extrema, find_positive_extrema};
use digamma_zeros::series::{verify_identity, MIN_TERMS};
use digamma_zeros::zeros::approx_zero;
use digamma_zeros::{ApproxForm, ExtremumRecord, IdentityId, SeriesResult, ZeroFamily, ZeroRecord};
use serde::Serialize;

use crate::output::{csv_bytes, emit, json_bytes, opt12, sig12, Format};
use crate::report::{run_verify, VerifyConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] digamma_zeros::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "digamma-zeros",
    version,
    about = "Zeros of ψ and ψ_G, zero-sum identities and hyperfactorial extrema"
)]
pub struct Cli {
    /// Output format (tables default to csv; verify writes json).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file, replaced atomically. Defaults to stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores). Never changes the output.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub threads: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of zeros 0..=k_max of ψ or ψ_G.
    Zeros {
        #[arg(long)]
        family: ZeroFamily,
        #[arg(long)]
        k_max: u64,
    },
    /// Zero-sum identities against their closed forms.
    Sums {
        /// Identity name or `all`.
        #[arg(long, default_value = "all")]
        id: IdSelection,
        /// Number of exact zeros (at least 50).
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(MIN_TERMS as u64..))]
        k: u64,
    },
    /// The two positive extrema of K and the extrema near −1, …, −n_max.
    Extrema {
        #[arg(long, default_value_t = 8)]
        n_max: u64,
    },
    /// Full verification report (JSON).
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdSelection {
    All,
    One(IdentityId),
}

impl std::str::FromStr for IdSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            Ok(IdSelection::All)
        } else {
            s.parse().map(IdSelection::One)
        }
    }
}

/// Whether every check behind a successful command passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroRow {
    #[serde(flatten)]
    pub record: ZeroRecord,
    pub approx_arctan: Option<f64>,
    pub approx_hermite: Option<f64>,
    /// |value − approx_arctan|
    pub approx_gap: Option<f64>,
}

pub const ZERO_COLUMNS: [&str; 8] =
    ["index", "value", "bracket_lo", "bracket_hi", "residual", "approx_arctan", "approx_hermite", "approx_gap"];
pub const SUM_COLUMNS: [&str; 11] = [
    "id",
    "terms_used",
    "partial_sum",
    "tail_estimate",
    "tail_bound",
    "total",
    "closed_form",
    "abs_error",
    "rel_error",
    "tolerance",
    "pass",
];
pub const EXTREMUM_COLUMNS: [&str; 6] = ["n", "location", "kind", "approx_location", "residual", "gap"];

pub fn zero_rows(table: &[ZeroRecord]) -> Vec<ZeroRow> {
    table
        .iter()
        .map(|r| {
            let arctan = approx_zero(r.family, r.index, ApproxForm::Arctan).ok();
            let hermite = approx_zero(r.family, r.index, ApproxForm::Hermite).ok();
            ZeroRow {
                record: *r,
                approx_arctan: arctan,
                approx_hermite: hermite,
                approx_gap: arctan.map(|a| (r.value - a).abs()),
            }
        })
        .collect()
}

fn zeros_payload(rows: &[ZeroRow], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => json_bytes(rows),
        Format::Csv => csv_bytes(
            &ZERO_COLUMNS,
            rows.iter().map(|r| {
                vec![
                    r.record.index.to_string(),
                    sig12(r.record.value),
                    sig12(r.record.bracket_lo),
                    sig12(r.record.bracket_hi),
                    sig12(r.record.residual),
                    opt12(r.approx_arctan),
                    opt12(r.approx_hermite),
                    opt12(r.approx_gap),
                ]
            }),
        ),
    }
}

fn sums_payload(results: &[SeriesResult], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => json_bytes(results),
        Format::Csv => csv_bytes(
            &SUM_COLUMNS,
            results.iter().map(|r| {
                vec![
                    r.id.name().to_string(),
                    r.terms_used.to_string(),
                    sig12(r.partial_sum),
                    sig12(r.tail_estimate),
                    sig12(r.tail_bound),
                    sig12(r.total),
                    sig12(r.closed_form),
                    sig12(r.abs_error),
                    sig12(r.rel_error),
                    sig12(r.id.tolerance()),
                    r.within_tolerance().to_string(),
                ]
            }),
        ),
    }
}

fn extrema_payload(records: &[ExtremumRecord], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => json_bytes(records),
        Format::Csv => csv_bytes(
            &EXTREMUM_COLUMNS,
            records.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    sig12(r.location),
                    format!("{:?}", r.kind).to_lowercase(),
                    opt12(r.approx_location),
                    sig12(r.residual),
                    opt12(r.gap),
                ]
            }),
        ),
    }
}

pub fn extrema_records(n_max: u64) -> Result<Vec<ExtremumRecord>, CliError> {
    let (a, b) = find_positive_extrema()?;
    let mut out = vec![a, b];
    for n in 1..=n_max {
        out.extend(find_negative_extrema(n)?);
    }
    Ok(out)
}

/// Runs one parsed command, writing its payload. Failed checks still write
/// their output and return [`Outcome::Fail`].
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n as usize);
    }
    pool.build()?.install(|| dispatch(cli))
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let table_format = cli.format.unwrap_or(Format::Csv);
    let out = cli.out.as_deref();
    match cli.command {
        Command::Zeros { family, k_max } => {
            let dir = cache::cache_dir_from_env();
            let table = cache::zero_table_cached(family, k_max, dir.as_deref())?;
            emit(&zeros_payload(&zero_rows(&table), table_format)?, out)?;
            Ok(Outcome::Pass)
        }
        Command::Sums { id, k } => {
            let ids = match id {
                IdSelection::All => IdentityId::ALL.to_vec(),
                IdSelection::One(id) => vec![id],
            };
            let results = ids.into_iter().map(|id| verify_identity(id, k as usize)).collect::<Result<Vec<_>, _>>()?;
            emit(&sums_payload(&results, table_format)?, out)?;
            Ok(if results.iter().all(SeriesResult::within_tolerance) { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Extrema { n_max } => {
            let records = extrema_records(n_max)?;
            emit(&extrema_payload(&records, table_format)?, out)?;
            Ok(Outcome::Pass)
        }
        Command::Verify => {
            if cli.format == Some(Format::Csv) {
                return Err(CliError::Usage("verify writes JSON only".into()));
            }
            let report = run_verify(&VerifyConfig::default());
            emit(&json_bytes(&report)?, out)?;
            for f in &report.failures {
                eprintln!("check failed: {f}");
            }
            Ok(if report.pass { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            eprintln!("digamma-zeros: {e}");
            e.exit_code()
        }
    }
}
