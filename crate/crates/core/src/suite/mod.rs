//! Verification suites: named checks over the catalog (or a suite file),
//! run in parallel and reported in a fixed order.

mod checks;
mod config;
mod defs;
pub mod mutation;
mod report;

use std::time::Instant;

use rayon::prelude::*;

pub use checks::{catalog_checks, user_checks, Check, Ctx, Outcome, ABELIAN};
pub use config::{CatalogSuite, ReportFormat, SuiteConfig, SuiteKind};
pub use defs::{Definitions, RMatrixDef, SuiteFile, TwistDef};
pub use report::{CheckResult, Report, ReportConfig, Status};

use crate::error::{Error, Result};

/// The definitions and checks a configuration selects.
pub fn plan(config: &SuiteConfig) -> Result<(Definitions, Vec<Check>)> {
    config.validate()?;
    let (defs, suites, file) = match &config.suite {
        SuiteKind::File(path) => {
            let file = SuiteFile::load(path)?;
            (Definitions::with_file(&file)?, file.base_suites()?, true)
        }
        kind => (Definitions::catalog()?, kind.catalog_suites(), false),
    };
    let mut checks: Vec<Check> = suites.into_iter().flat_map(catalog_checks).collect();
    if file {
        checks.extend(user_checks(&defs));
    }
    Ok((defs, checks))
}

/// Runs `checks` against `defs`; results come back sorted by name
/// whatever the schedule.
pub fn run_checks(
    checks: &[Check],
    defs: &Definitions,
    config: &SuiteConfig,
) -> Result<Vec<CheckResult>> {
    let ctx = Ctx {
        defs,
        order: config.order,
        lifting: config.lifting,
        conv: config.conventions,
    };
    let one = |c: &Check| {
        let start = Instant::now();
        let out = c.run(&ctx);
        let elapsed_ms = if config.timings {
            start.elapsed().as_millis() as u64
        } else {
            0
        };
        let (status, first_failing_order, residual_term_count, computed_terms, message) = match out
        {
            Ok(o) if o.passed => (Status::Pass, None, 0, o.computed_terms, None),
            Ok(o) => (
                Status::Fail,
                o.first_failing_order,
                o.residual_terms,
                o.computed_terms,
                None,
            ),
            Err(e) => (Status::Error, None, 0, 0, Some(e.to_string())),
        };
        CheckResult {
            check_name: c.name.clone(),
            status,
            first_failing_order,
            residual_term_count,
            elapsed_ms,
            paper_anchor: c.anchor.clone(),
            message,
            computed_terms,
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Config(format!("cannot start {} worker threads: {e}", config.jobs)))?;
    let mut results: Vec<CheckResult> = pool.install(|| checks.par_iter().map(one).collect());
    results.sort_by(|a, b| a.check_name.cmp(&b.check_name));
    Ok(results)
}

pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    let (defs, checks) = plan(config)?;
    Ok(Report::new(config, run_checks(&checks, &defs, config)?))
}
