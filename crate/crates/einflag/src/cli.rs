//! Command-line front end: single-pair solves, grid sweeps, and lemma
//! suites, with table, JSON, and CSV renderings.
//!
//! Exit codes: 0 success, 2 invalid parameters or flags, 3 certification or
//! lemma failure.

use crate::report::{self, Format};
use crate::solver::{
    enumerate_einstein_with, enumerations_dual, verify_lemmas, Enumeration, LemmaReport,
    SolverParams,
};
use crate::{EinflagError, Result};
use clap::{Parser, Subcommand};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "einflag",
    version,
    about = "Certified enumeration of invariant Einstein metrics on symplectic partial flag spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate and certify all invariant Einstein metrics for one pair.
    Solve {
        /// Rank parameter n (requires n >= 3).
        #[arg(long)]
        n: i64,
        /// Splitting parameter p (requires 1 <= p <= n-1).
        #[arg(long)]
        p: i64,
        /// Fractional digits in decimal renderings.
        #[arg(long, default_value_t = 30)]
        digits: usize,
        /// Output format: table, json, or csv.
        #[arg(long, default_value = "table")]
        format: String,
        /// Append the lemma verdicts to the report.
        #[arg(long)]
        with_lemmas: bool,
    },
    /// Enumerate every pair with n up to a bound.
    Sweep {
        /// Largest n to include.
        #[arg(long = "n-max")]
        n_max: i64,
        /// Smallest n to include.
        #[arg(long = "n-min", default_value_t = 3)]
        n_min: i64,
        /// Fractional digits in decimal renderings.
        #[arg(long, default_value_t = 30)]
        digits: usize,
        /// Output format: table, json, or csv.
        #[arg(long, default_value = "table")]
        format: String,
        /// Write the report to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Number of concurrent pipelines.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Verify the supporting facts for one pair or a whole range.
    Lemmas {
        /// Rank parameter n (together with --p).
        #[arg(long)]
        n: Option<i64>,
        /// Splitting parameter p (together with --n).
        #[arg(long)]
        p: Option<i64>,
        /// Check every pair with n up to this bound instead.
        #[arg(long = "n-max")]
        n_max: Option<i64>,
    },
}

/// Parses arguments from the process environment and runs the selected
/// command, returning the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &EinflagError) -> i32 {
    match err {
        EinflagError::InvalidParameters(_) => 2,
        _ => 3,
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Solve {
            n,
            p,
            digits,
            format,
            with_lemmas,
        } => cmd_solve(n, p, digits, &format, with_lemmas),
        Command::Sweep {
            n_max,
            n_min,
            digits,
            format,
            out,
            jobs,
        } => cmd_sweep(n_min, n_max, digits, &format, out.as_deref(), jobs),
        Command::Lemmas { n, p, n_max } => cmd_lemmas(n, p, n_max),
    }
}

fn parse_format(format: &str) -> Result<Format> {
    format
        .parse::<Format>()
        .map_err(EinflagError::InvalidParameters)
}

fn csv_block(rows: &[(i64, i64, usize, &crate::solver::EinsteinSolution)]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(report::CSV_HEADER)
        .expect("csv header");
    for (n, p, idx, sol) in rows {
        writer
            .write_record(report::solution_csv_row(*n, *p, *idx, sol))
            .expect("csv row");
    }
    let bytes = writer.into_inner().expect("csv flush");
    String::from_utf8(bytes).expect("csv utf8")
}

fn cmd_solve(n: i64, p: i64, digits: usize, format: &str, with_lemmas: bool) -> Result<i32> {
    let format = parse_format(format)?;
    let started = Instant::now();
    let enumeration = enumerate_einstein_with(n, p, &SolverParams::from_env())?;
    let lemmas = if with_lemmas {
        Some(verify_lemmas(n, p)?)
    } else {
        None
    };
    let rendered = match format {
        Format::Table => {
            let mut out = report::enumeration_table(&enumeration, digits);
            if let Some(l) = &lemmas {
                out.push_str(&report::lemma_table(l));
            }
            out
        }
        Format::Json => {
            let value = report::enumeration_json(&enumeration, digits, lemmas.as_ref(), None);
            format!(
                "{}\n",
                serde_json::to_string_pretty(&value).expect("json rendering")
            )
        }
        Format::Csv => {
            let rows: Vec<_> = enumeration
                .solutions
                .iter()
                .enumerate()
                .map(|(k, s)| (n, p, k + 1, s))
                .collect();
            csv_block(&rows)
        }
    };
    print!("{rendered}");
    eprintln!("solve ({n},{p}) completed in {:.2}s", started.elapsed().as_secs_f64());
    let lemmas_ok = lemmas.as_ref().map_or(true, |l| l.all_pass());
    Ok(if lemmas_ok { 0 } else { 3 })
}

struct PairRecord {
    enumeration: Enumeration,
    lemmas: LemmaReport,
}

fn compute_records(pairs: &[(i64, i64)], jobs: usize) -> Vec<Result<PairRecord>> {
    let params = SolverParams::from_env();
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<PairRecord>>>> =
        pairs.iter().map(|_| Mutex::new(None)).collect();
    let workers = jobs.clamp(1, pairs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= pairs.len() {
                    break;
                }
                let (n, p) = pairs[k];
                let record = enumerate_einstein_with(n, p, &params).and_then(|enumeration| {
                    Ok(PairRecord {
                        enumeration,
                        lemmas: verify_lemmas(n, p)?,
                    })
                });
                *slots[k].lock().expect("result slot") = Some(record);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| {
            slot.into_inner()
                .expect("result slot")
                .expect("every pair computed")
        })
        .collect()
}

fn cmd_sweep(
    n_min: i64,
    n_max: i64,
    digits: usize,
    format: &str,
    out: Option<&std::path::Path>,
    jobs: usize,
) -> Result<i32> {
    let format = parse_format(format)?;
    if n_max < 3 || n_min < 3 || n_min > n_max {
        return Err(EinflagError::InvalidParameters(format!(
            "sweep range requires 3 <= n-min <= n-max, got {n_min}..={n_max}"
        )));
    }
    let pairs: Vec<(i64, i64)> = (n_min..=n_max)
        .flat_map(|n| (1..n).map(move |p| (n, p)))
        .collect();
    let started = Instant::now();

    let mut records = Vec::with_capacity(pairs.len());
    for ((n, p), outcome) in pairs.iter().zip(compute_records(&pairs, jobs)) {
        match outcome {
            Ok(record) => records.push(record),
            Err(err) => {
                eprintln!("sweep failed at ({n}, {p}): {err}");
                return Ok(exit_code_for(&err));
            }
        }
    }

    let index: HashMap<(i64, i64), usize> = pairs
        .iter()
        .enumerate()
        .map(|(k, pair)| (*pair, k))
        .collect();
    let duality: Vec<bool> = pairs
        .iter()
        .enumerate()
        .map(|(k, (n, p))| {
            index
                .get(&(*n, n - p))
                .map(|j| enumerations_dual(&records[k].enumeration, &records[*j].enumeration))
                .unwrap_or(false)
        })
        .collect();

    let rendered = match format {
        Format::Table => {
            let mut out = String::new();
            for (record, dual) in records.iter().zip(&duality) {
                out.push_str(&report::enumeration_table(&record.enumeration, digits));
                let lemma_status = if record.lemmas.all_pass() { "pass" } else { "FAIL" };
                let _ = writeln!(out, "duality_check: {dual}; lemmas: {lemma_status}");
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let values: Vec<_> = records
                .iter()
                .zip(&duality)
                .map(|(record, dual)| {
                    report::enumeration_json(
                        &record.enumeration,
                        digits,
                        Some(&record.lemmas),
                        Some(*dual),
                    )
                })
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&values).expect("json rendering")
            )
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for record in &records {
                let n = record.enumeration.space.n();
                let p = record.enumeration.space.p();
                for (k, sol) in record.enumeration.solutions.iter().enumerate() {
                    rows.push((n, p, k + 1, sol));
                }
            }
            csv_block(&rows)
        }
    };

    match out {
        Some(path) => std::fs::write(path, rendered).map_err(|e| {
            EinflagError::InvalidParameters(format!("cannot write {}: {e}", path.display()))
        })?,
        None => print!("{rendered}"),
    }
    eprintln!(
        "sweep of {} pairs completed in {:.2}s",
        pairs.len(),
        started.elapsed().as_secs_f64()
    );

    let ok = records.iter().all(|record| {
        record.enumeration.kahler_count() == 4
            && record.enumeration.non_kahler_count() == 2
            && record.lemmas.all_pass()
    }) && duality.iter().all(|d| *d);
    Ok(if ok { 0 } else { 3 })
}

fn cmd_lemmas(n: Option<i64>, p: Option<i64>, n_max: Option<i64>) -> Result<i32> {
    let pairs: Vec<(i64, i64)> = match (n, p, n_max) {
        (Some(n), Some(p), None) => vec![(n, p)],
        (None, None, Some(limit)) => {
            if limit < 3 {
                return Err(EinflagError::InvalidParameters(format!(
                    "lemma range requires n-max >= 3, got {limit}"
                )));
            }
            (3..=limit)
                .flat_map(|n| (1..n).map(move |p| (n, p)))
                .collect()
        }
        _ => {
            return Err(EinflagError::InvalidParameters(
                "pass either --n and --p together, or --n-max alone".into(),
            ))
        }
    };

    let mut all_pass = true;
    let mut rendered = String::new();
    for (n, p) in &pairs {
        let report = verify_lemmas(*n, *p)?;
        all_pass = all_pass && report.all_pass();
        rendered.push_str(&report::lemma_table(&report));
    }
    let _ = writeln!(
        rendered,
        "{} pair{} checked: {}",
        pairs.len(),
        if pairs.len() == 1 { "" } else { "s" },
        if all_pass {
            "all applicable lemmas pass"
        } else {
            "FAILURES present"
        }
    );
    print!("{rendered}");
    Ok(if all_pass { 0 } else { 3 })
}
