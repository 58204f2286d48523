//! Command-line frontend for `pencilcount`.
//!
//! Exit codes: 0 on success, 1 for invalid input (bad flags, off-shell or
//! out-of-domain problems), 2 when an internal cross-check fails.

mod query;
mod record;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;

use pencilcount::degeneration::{
    genus0_count, genus_g_count, genus_g_weighted, pad_moving, RamificationProblem,
};
use pencilcount::genus1::{
    count, count_laurent, tuples_of_degree, weighted_count, weighted_fixed_first, Genus1Tuple,
};
use pencilcount::verify::run_suite;
use pencilcount::{BigInt, Error, Result};

pub use query::{Cli, Command, Format, GenusG, MethodArg, Query, SuiteArg};
pub use record::{emit, PropertyRow, ResultRecord, TableRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

/// Parses `args` (program name first), runs the query and writes the result.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let outcome = match cli.jobs {
        Some(0) => Err(Error::Domain("--jobs must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::Internal(format!("thread pool: {e}"))),
        },
        None => execute(&cli),
    };
    match outcome {
        Ok((record, code)) => {
            let _ = write!(out, "{}", emit(&record, cli.format));
            if code == EXIT_INTERNAL {
                let _ = writeln!(err, "internal error: cross-check failed");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_INPUT
            }
        }
    }
}

/// Evaluates a parsed command, returning the record and its exit code.
pub fn execute(cli: &Cli) -> Result<(ResultRecord, i32)> {
    let started = Instant::now();
    let mut record = ResultRecord::new(Query::from_command(&cli.command, cli.format));
    let mut code = EXIT_OK;
    match &cli.command {
        Command::Genus0 { degree, ram } => {
            record.degree = Some(*degree);
            record.result = Some(genus0_count(*degree, ram)?.to_string());
        }
        Command::Genus1 {
            ram,
            degree,
            method,
        } => {
            let t = genus1_tuple(ram)?;
            if let Some(d) = degree {
                if *d != t.degree() {
                    return Err(Error::Domain(format!(
                        "--degree {d} contradicts the orders {t}, which imply degree {}",
                        t.degree()
                    )));
                }
            }
            let report = count(&t, &method.methods())?;
            record.degree = Some(t.degree());
            record.methods = report
                .values
                .iter()
                .map(|(m, v)| (m.name().to_string(), v.to_string()))
                .collect();
            record.agreed = Some(report.agreed);
            record.result = report.value().map(BigInt::to_string);
            if !report.agreed {
                code = EXIT_INTERNAL;
            }
        }
        Command::Weighted { ram, fixed_first } => {
            let t = genus1_tuple(ram)?;
            let value = if *fixed_first {
                weighted_fixed_first(&t)?
            } else {
                weighted_count(&t)?
            };
            record.degree = Some(t.degree());
            record.result = Some(value.to_string());
        }
        Command::Genusg(g) => {
            let p = RamificationProblem::new(g.genus, g.degree, g.fixed.clone(), g.moving.clone())?;
            let (padded, factor) = pad_moving(&p)?;
            let padded_value = if g.weighted {
                genus_g_weighted(&padded)?
            } else {
                genus_g_count(&padded)?
            };
            if &padded_value % &factor != BigInt::from(0) {
                return Err(Error::Internal(format!(
                    "padded count {padded_value} is not divisible by the pad factor {factor}"
                )));
            }
            record.degree = Some(g.degree);
            record.result = Some((&padded_value / &factor).to_string());
            record.factor = Some(factor.to_string());
            record.padded_result = Some(padded_value.to_string());
        }
        Command::Table {
            genus,
            degree,
            ordered,
        } => {
            if *genus != 1 {
                return Err(Error::Domain(format!(
                    "table supports genus 1 only, got {genus}"
                )));
            }
            if *degree < 2 {
                return Err(Error::Domain(format!("degree must be >= 2, got {degree}")));
            }
            let mut tuples = tuples_of_degree(*degree, 1, *degree);
            if !*ordered {
                tuples.retain(|t| t.orders() == t.sorted());
            }
            let mut rows = tuples
                .par_iter()
                .map(|t| {
                    count_laurent(t).map(|v| TableRow {
                        orders: t.orders().to_vec(),
                        count: v.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.sort_by(|a, b| a.orders.cmp(&b.orders));
            record.degree = Some(*degree);
            record.results = rows;
        }
        Command::Verify { suite, max_degree } => {
            let outcomes = run_suite((*suite).into(), *max_degree)?;
            if outcomes.iter().any(|o| !o.passed) {
                code = EXIT_INTERNAL;
            }
            record.properties = outcomes
                .into_iter()
                .map(|o| PropertyRow {
                    name: o.name,
                    passed: o.passed,
                    detail: o.detail,
                })
                .collect();
        }
    }
    record.elapsed_ms = started.elapsed().as_secs_f64() * 1000.0;
    Ok((record, code))
}

fn genus1_tuple(ram: &[i64]) -> Result<Genus1Tuple> {
    let orders: [i64; 4] = ram.try_into().map_err(|_| {
        Error::Domain(format!(
            "expected four orders d1,d2,d3,d4, got {}",
            ram.len()
        ))
    })?;
    Genus1Tuple::new(orders)
}
