//! Named verification suites.  Each suite runs a family of exhaustive or
//! seeded checks and returns a report with one line per check.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presheaf::default_node_limit;

mod boxcat;
mod cubical;
mod homotopy;
mod patterns;
mod simplicial;

pub use patterns::{cell_patterns, pattern_map, tensor_patterns};
pub use simplicial::{table1, Table1, Table1Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Counterexample or explanation, for failures and skips.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            write!(f, "{tag} {}", c.name)?;
            if let Some(d) = &c.detail {
                write!(f, ": {d}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "suite {}: {} ({} passed, {} failed, {} skipped, {} ms)",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip),
            self.wall_ms
        )
    }
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    /// Overrides the suite's own dimension bound.
    pub max_dim: Option<usize>,
    pub seed: u64,
    pub node_limit: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { max_dim: None, seed: 0, node_limit: default_node_limit() }
    }
}

impl SuiteParams {
    fn dim(&self, default: usize) -> usize {
        self.max_dim.unwrap_or(default)
    }
}

pub const SUITES: [&str; 12] = [
    "boxcat-oracle",
    "cubical-identities",
    "boundary-products",
    "tensor-power",
    "strong-monoidal",
    "table1",
    "marking-ext-invertible",
    "elementary-boxes",
    "monoidal-model-squares",
    "homotopy",
    "reflection",
    "gray-monos",
];

/// Collects check outcomes.
#[derive(Default)]
pub(crate) struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    pub(crate) fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let detail = (!ok).then(detail);
        self.checks.push(Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail });
    }

    /// Record an outcome that may have errored; errors count as failures.
    pub(crate) fn outcome(&mut self, name: impl Into<String>, r: Result<std::result::Result<(), String>>) {
        let (status, detail) = match r {
            Ok(Ok(())) => (Status::Pass, None),
            Ok(Err(why)) => (Status::Fail, Some(why)),
            Err(e) => (Status::Fail, Some(format!("error: {e}"))),
        };
        self.checks.push(Check { name: name.into(), status, detail });
    }

    pub(crate) fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Skip, detail: Some(why.into()) });
    }
}

/// `Ok(())` when `ok`, else the detail.
pub(crate) fn ensure(ok: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut rec = Recorder::default();
    match name {
        "boxcat-oracle" => boxcat::oracle(&mut rec, params),
        "cubical-identities" => boxcat::identities(&mut rec, params),
        "boundary-products" => cubical::boundary_products(&mut rec, params),
        "elementary-boxes" => cubical::elementary_boxes(&mut rec, params),
        "monoidal-model-squares" => cubical::monoidal_model_squares(&mut rec, params),
        "gray-monos" => cubical::gray_monos(&mut rec, params),
        "tensor-power" => simplicial::tensor_power(&mut rec, params),
        "strong-monoidal" => simplicial::strong_monoidal(&mut rec, params),
        "table1" => simplicial::table1_suite(&mut rec, params),
        "marking-ext-invertible" => simplicial::marking_ext_invertible(&mut rec, params),
        "reflection" => simplicial::reflection(&mut rec, params),
        "homotopy" => homotopy::suite(&mut rec, params),
        _ => return Err(Error::UnknownSuite(name.to_string())),
    }
    Ok(SuiteReport { suite: name.to_string(), checks: rec.checks, wall_ms: start.elapsed().as_millis() })
}
