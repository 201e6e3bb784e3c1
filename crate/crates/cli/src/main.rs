use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use twistcheck::algebra::catalog as algebras;
use twistcheck::algebra::Lifting;
use twistcheck::enveloping::{to_records, TermRecord};
use twistcheck::qdeform::Variant;
use twistcheck::rmatrix::catalog as rcat;
use twistcheck::suite::{self, ReportFormat, SuiteConfig, SuiteKind};
use twistcheck::twist::catalog::{self as tcat, Conventions};

#[derive(Parser)]
#[command(
    name = "twistcheck",
    version,
    about = "Exact verification of Lie bialgebra and twist identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print a report.
    Verify {
        /// lorentz, poincare, qdeform, all or file:<path>
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        order: u32,
        #[arg(long, default_value = "direct")]
        lifting: String,
        /// json or text
        #[arg(long, default_value = "json")]
        report: String,
        /// Worker threads (default: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Convention flags as key=value, comma-separated or repeated.
        #[arg(long, value_delimiter = ',')]
        flags: Vec<String>,
        /// Record wall-clock time per check (makes reports vary between runs).
        #[arg(long)]
        timings: bool,
    },
    /// Print the canonical term listing of a catalog r-matrix or twist.
    Expand {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 3)]
        order: u32,
        #[arg(long, value_delimiter = ',')]
        flags: Vec<String>,
    },
    /// List the catalog.
    List,
}

#[derive(Serialize)]
struct Expansion {
    name: String,
    kind: &'static str,
    algebra: String,
    formula: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    rmatrix: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<u32>,
    terms: Vec<TermRecord>,
}

fn expand(name: &str, order: u32, flags: &[String]) -> Result<Expansion> {
    if order == 0 {
        bail!("order must be at least 1");
    }
    let mut conv = Conventions::default();
    for f in flags {
        let (k, v) = f
            .split_once('=')
            .with_context(|| format!("flag `{f}` is not of the form key=value"))?;
        conv.set(k.trim(), v.trim())?;
    }
    if let Ok(e) = rcat::entry(name) {
        return Ok(Expansion {
            name: name.to_owned(),
            kind: "rmatrix",
            algebra: e.algebra.to_owned(),
            formula: e.formula.to_owned(),
            rmatrix: None,
            order: None,
            terms: to_records(e.build()?.body()),
        });
    }
    let e = tcat::entry(name).map_err(|_| {
        anyhow::anyhow!("unknown r-matrix or twist `{name}`; see `twistcheck list`")
    })?;
    let f = tcat::catalog_twist(name, order, conv)?;
    Ok(Expansion {
        name: name.to_owned(),
        kind: "twist",
        algebra: e.algebra.to_owned(),
        formula: e.formula.to_owned(),
        rmatrix: Some(e.rmatrix.to_owned()),
        order: Some(order),
        terms: to_records(f.body()),
    })
}

fn list() -> String {
    let mut out = String::from("algebras:\n");
    for a in algebras::ALGEBRA_NAMES {
        let dim = algebras::algebra(a).map(|x| x.dim()).unwrap_or(0);
        out += &format!("  {a} (dim {dim})\n");
    }
    out += "r-matrices:\n";
    for e in rcat::ENTRIES {
        out += &format!("  {:<34} {}\n", e.name, e.formula);
    }
    out += "twists:\n";
    for e in tcat::TWISTS {
        out += &format!("  {:<34} {}\n", e.name, e.formula);
    }
    out += "q-deformed Hopf algebras:\n";
    for v in Variant::ALL {
        out += &format!("  {:<34} {}\n", v.name(), v.formula());
    }
    out += "suites: lorentz, poincare, qdeform, all, file:<path>\n";
    out += &format!("flags: {} (on|off)\n", Conventions::FLAGS.join(", "));
    out
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            suite,
            order,
            lifting,
            report,
            jobs,
            flags,
            timings,
        } => {
            let mut config = SuiteConfig {
                suite: suite.parse::<SuiteKind>()?,
                order,
                lifting: lifting.parse::<Lifting>()?,
                report_format: report.parse::<ReportFormat>()?,
                jobs,
                timings,
                ..SuiteConfig::default()
            };
            config.set_flags(flags.iter().map(String::as_str))?;
            let report = suite::run_suite(&config)?;
            match config.report_format {
                ReportFormat::Json => emit(&report.to_json())?,
                ReportFormat::Text => emit(&report.to_text())?,
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Expand { name, order, flags } => {
            let e = expand(&name, order, &flags)?;
            emit(&(serde_json::to_string_pretty(&e)? + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::List => {
            emit(&list())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(s: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(s.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
