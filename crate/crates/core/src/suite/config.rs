use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::Lifting;
use crate::error::{Error, Result};
use crate::twist::catalog::Conventions;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Lorentz,
    Poincare,
    Qdeform,
    All,
    /// A suite definition file, see [`super::SuiteFile`].
    File(PathBuf),
}

impl SuiteKind {
    /// The catalog suites this kind expands to (none for a file).
    pub fn catalog_suites(&self) -> Vec<CatalogSuite> {
        match self {
            SuiteKind::Lorentz => vec![CatalogSuite::Lorentz],
            SuiteKind::Poincare => vec![CatalogSuite::Poincare],
            SuiteKind::Qdeform => vec![CatalogSuite::Qdeform],
            SuiteKind::All => CatalogSuite::ALL.to_vec(),
            SuiteKind::File(_) => Vec::new(),
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteKind::Lorentz => f.write_str("lorentz"),
            SuiteKind::Poincare => f.write_str("poincare"),
            SuiteKind::Qdeform => f.write_str("qdeform"),
            SuiteKind::All => f.write_str("all"),
            SuiteKind::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SuiteKind> {
        Ok(match s {
            "lorentz" => SuiteKind::Lorentz,
            "poincare" => SuiteKind::Poincare,
            "qdeform" => SuiteKind::Qdeform,
            "all" => SuiteKind::All,
            _ => match s.strip_prefix("file:") {
                Some(p) if !p.is_empty() => SuiteKind::File(PathBuf::from(p)),
                _ => {
                    return Err(Error::Config(format!(
                    "unknown suite `{s}`; expected lorentz, poincare, qdeform, all or file:<path>"
                )))
                }
            },
        })
    }
}

/// The bundled suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CatalogSuite {
    Lorentz,
    Poincare,
    Qdeform,
}

impl CatalogSuite {
    pub const ALL: [CatalogSuite; 3] = [
        CatalogSuite::Lorentz,
        CatalogSuite::Poincare,
        CatalogSuite::Qdeform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogSuite::Lorentz => "lorentz",
            CatalogSuite::Poincare => "poincare",
            CatalogSuite::Qdeform => "qdeform",
        }
    }
}

impl FromStr for CatalogSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<CatalogSuite> {
        CatalogSuite::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown catalog suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Json,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReportFormat> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            _ => Err(Error::Config(format!(
                "unknown report format `{s}`; expected json or text"
            ))),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Json => "json",
            ReportFormat::Text => "text",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: SuiteKind,
    /// Truncation order of every series; also the λ-order of the
    /// q-deformed twist.
    pub order: u32,
    pub lifting: Lifting,
    pub report_format: ReportFormat,
    pub conventions: Conventions,
    /// Worker threads; `0` lets the pool decide. Never affects results.
    pub jobs: usize,
    /// Record wall-clock times; off by default so reports are reproducible
    /// byte for byte.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            suite: SuiteKind::All,
            order: 3,
            lifting: Lifting::Direct,
            report_format: ReportFormat::Json,
            conventions: Conventions::default(),
            jobs: 0,
            timings: false,
        }
    }
}

impl SuiteConfig {
    pub fn new(suite: SuiteKind) -> SuiteConfig {
        SuiteConfig {
            suite,
            ..SuiteConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::Config("order must be at least 1".into()));
        }
        Ok(())
    }

    /// Applies `key=value` convention flags.
    pub fn set_flags<'a>(&mut self, pairs: impl IntoIterator<Item = &'a str>) -> Result<()> {
        for p in pairs {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("flag `{p}` is not of the form key=value")))?;
            self.conventions.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    pub fn flag_map(&self) -> BTreeMap<String, String> {
        self.conventions
            .pairs()
            .iter()
            .map(|&(k, on)| (k.to_owned(), if on { "on" } else { "off" }.to_owned()))
            .collect()
    }
}
