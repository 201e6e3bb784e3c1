use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::config::SuiteConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_name: String,
    pub status: Status,
    pub first_failing_order: Option<u32>,
    pub residual_term_count: usize,
    pub elapsed_ms: u64,
    pub paper_anchor: String,
    /// Error message for `status = error`; not part of the JSON report.
    #[serde(skip)]
    pub message: Option<String>,
    #[serde(skip)]
    pub computed_terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    pub suite: String,
    pub order: u32,
    pub lifting: String,
    pub report: String,
    pub flags: BTreeMap<String, String>,
    pub timings: bool,
}

impl ReportConfig {
    pub fn of(c: &SuiteConfig) -> ReportConfig {
        ReportConfig {
            suite: c.suite.to_string(),
            order: c.order,
            lifting: c.lifting.to_string(),
            report: c.report_format.to_string(),
            flags: c.flag_map(),
            timings: c.timings,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    pub config: ReportConfig,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(config: &SuiteConfig, mut results: Vec<CheckResult>) -> Report {
        results.sort_by(|a, b| a.check_name.cmp(&b.check_name));
        Report {
            version: env!("CARGO_PKG_VERSION").to_owned(),
            config: ReportConfig::of(config),
            results,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.status == s).count()
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_name == name)
    }

    /// Names of the passing checks.
    pub fn passing(&self) -> Vec<&str> {
        self.results
            .iter()
            .filter(|r| r.status == Status::Pass)
            .map(|r| r.check_name.as_str())
            .collect()
    }

    pub fn computed_terms(&self) -> usize {
        self.results.iter().map(|r| r.computed_terms).sum()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Checks grouped by `<suite>.<family>`, one line each.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let flags: Vec<String> = c.flags.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(
            out,
            "twistcheck {}: suite {}, order {}, lifting {}, flags {}",
            self.version,
            c.suite,
            c.order,
            c.lifting,
            flags.join(",")
        );
        let mut group = String::new();
        for r in &self.results {
            let g = r
                .check_name
                .splitn(3, '.')
                .take(2)
                .collect::<Vec<_>>()
                .join(".");
            if g != group {
                let _ = writeln!(out, "\n[{g}]");
                group = g;
            }
            let mut detail = String::new();
            if r.status != Status::Pass {
                let _ = write!(detail, " residual terms {}", r.residual_term_count);
                if let Some(o) = r.first_failing_order {
                    let _ = write!(detail, ", first failing order {o}");
                }
                if let Some(m) = &r.message {
                    let _ = write!(detail, " ({m})");
                }
            }
            if c.timings {
                let _ = write!(detail, " {} ms", r.elapsed_ms);
            }
            let _ = writeln!(out, "  {:<5} {}{}", r.status.label(), r.check_name, detail);
            let _ = writeln!(out, "        {}", r.paper_anchor);
        }
        let _ = writeln!(
            out,
            "\n{} checks: {} passed, {} failed, {} errors",
            self.results.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error)
        );
        out
    }
}
