//! Verification suites: each check compares two exactly computed sides and
//! records the difference.

mod algebra;
mod skein;

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::time::Instant;

use serde::Serialize;

use crate::annulus::{AioElt, AooElt};
use crate::diagram::{DiagramError, DEFAULT_MAX_STATES};
use crate::rings::{CycNum, LaurentInt, Ring, RootSpec, SkeinPoly};
use crate::tl::TLElement;

pub const SUITE_NAMES: &[&str] = &[
    "theorem1", "skew", "tl", "annulus", "framing", "degrees", "lemma62", "lemma68", "prop61", "prop63", "chebhom",
    "phi0",
];

/// Parameters shared by all suites; `None` means the suite default.
#[derive(Clone, Debug)]
pub struct Config {
    /// Restrict root-of-unity sweeps to this single root.
    pub xi: Option<RootSpec>,
    /// Largest cyclotomic level `n` in root-of-unity sweeps.
    pub n_max: Option<u32>,
    /// Largest threading order `N`.
    pub big_n_max: Option<u32>,
    pub k_max: Option<u32>,
    /// Run only this `k` where a suite sweeps over `k`.
    pub k: Option<u32>,
    pub max_states: u64,
    /// Record wall times (makes reports run-dependent).
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Self { xi: None, n_max: None, big_n_max: None, k_max: None, k: None, max_states: DEFAULT_MAX_STATES, timings: false }
    }
}

impl Config {
    fn roots(&self, max_level: u32) -> Vec<RootSpec> {
        match self.xi {
            Some(xi) => vec![xi],
            None => RootSpec::all_up_to(max_level).collect(),
        }
    }

    fn ks(&self, lo: u32, default_max: u32) -> Vec<u32> {
        match self.k {
            Some(k) => vec![k],
            None => (lo..=self.k_max.unwrap_or(default_max)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The computation was refused, e.g. because its state space is too large.
    Refused,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Refused => "REFUSED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub identity: String,
    pub params: String,
    pub status: Status,
    /// Exact difference of the two sides, or the number of counterexamples
    /// for predicate checks.
    pub residual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        Self { suite: suite.to_string(), params: BTreeMap::new(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    fn param(&mut self, key: &str, value: impl Display) {
        self.params.insert(key.to_string(), value.to_string());
    }

    fn push(&mut self, c: Check) {
        self.checks.push(c);
    }
}

impl Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let failed = self.checks.iter().filter(|c| c.status != Status::Pass).count();
        writeln!(f, "suite {} [{}]: {} checks, {} failed", self.suite, params.join(" "), self.checks.len(), failed)?;
        for c in &self.checks {
            write!(f, "  {} {} ({}) {}: residual {}", c.status, c.id, c.params, c.identity, c.residual)?;
            if let Some(d) = &c.detail {
                write!(f, "; {d}")?;
            }
            if let Some(ms) = c.wall_ms {
                write!(f, " [{ms} ms]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A value whose vanishing constitutes a passing check.
pub trait Residual: Display {
    fn vanishes(&self) -> bool;
}

impl Residual for LaurentInt {
    fn vanishes(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl Residual for CycNum {
    fn vanishes(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl<C: Ring> Residual for SkeinPoly<C> {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl<C: Ring> Residual for AioElt<C> {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Residual for AooElt {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Residual for TLElement {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

/// Builds checks with a shared timer policy.
struct Recorder<'a> {
    report: &'a mut SuiteReport,
    timings: bool,
}

impl Recorder<'_> {
    fn param(&mut self, key: &str, value: impl Display) {
        self.report.param(key, value);
    }

    /// Passes iff `residual` is exactly zero.
    fn zero<R: Residual>(&mut self, id: &str, identity: &str, params: String, residual: R, started: Instant) {
        let status = if residual.vanishes() { Status::Pass } else { Status::Fail };
        self.finish(id, identity, params, status, residual.to_string(), None, started);
    }

    /// Passes iff there are no counterexamples; the first few are listed.
    fn none_of(&mut self, id: &str, identity: &str, params: String, bad: Vec<String>, started: Instant) {
        let status = if bad.is_empty() { Status::Pass } else { Status::Fail };
        let detail = (!bad.is_empty()).then(|| bad.iter().take(5).cloned().collect::<Vec<_>>().join(", "));
        self.finish(id, identity, params, status, bad.len().to_string(), detail, started);
    }

    /// Records a computation that could not produce a residual.
    fn error(&mut self, id: &str, identity: &str, params: String, err: &DiagramError, started: Instant) {
        let status = match err {
            DiagramError::StateSpace(_) => Status::Refused,
            _ => Status::Fail,
        };
        self.finish(id, identity, params, status, "n/a".into(), Some(err.to_string()), started);
    }

    /// Like [`Recorder::none_of`] but with an explanatory note on success.
    fn note(&mut self, id: &str, identity: &str, params: String, bad: Vec<String>, note: String, started: Instant) {
        self.none_of(id, identity, params, bad, started);
        let last = self.report.checks.last_mut().expect("just pushed");
        if last.detail.is_none() {
            last.detail = Some(note);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        &mut self,
        id: &str,
        identity: &str,
        params: String,
        status: Status,
        residual: String,
        detail: Option<String>,
        started: Instant,
    ) {
        let wall_ms = self.timings.then(|| started.elapsed().as_millis());
        self.report.push(Check { id: id.into(), identity: identity.into(), params, status, residual, detail, wall_ms });
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?} (known: {names})", names = SUITE_NAMES.join(", "))]
    UnknownSuite(String),
    #[error("max-states {0} exceeds the hard limit 2^30")]
    MaxStates(u64),
}

pub fn run_suite(name: &str, cfg: &Config) -> Result<SuiteReport, VerifyError> {
    if cfg.max_states > crate::diagram::HARD_STATE_LIMIT {
        return Err(VerifyError::MaxStates(cfg.max_states));
    }
    let mut report = SuiteReport::new(name);
    {
        let mut rec = Recorder { report: &mut report, timings: cfg.timings };
        match name {
            "theorem1" => algebra::theorem1(cfg, &mut rec),
            "skew" => algebra::skew(cfg, &mut rec),
            "tl" => algebra::tl(cfg, &mut rec),
            "annulus" => algebra::annulus(cfg, &mut rec),
            "lemma62" => algebra::lemma62(cfg, &mut rec),
            "framing" => skein::framing(cfg, &mut rec),
            "degrees" => skein::degrees(cfg, &mut rec),
            "lemma68" => skein::lemma68(cfg, &mut rec),
            "prop61" => skein::prop61(cfg, &mut rec),
            "prop63" => skein::prop63(cfg, &mut rec),
            "chebhom" => skein::chebhom(cfg, &mut rec),
            "phi0" => skein::phi0(cfg, &mut rec),
            other => return Err(VerifyError::UnknownSuite(other.to_string())),
        }
    }
    Ok(report)
}

/// Runs the named suites in order.
pub fn verify_suites(names: &[String], cfg: &Config) -> Result<Vec<SuiteReport>, VerifyError> {
    for n in names {
        if !SUITE_NAMES.contains(&n.as_str()) {
            return Err(VerifyError::UnknownSuite(n.clone()));
        }
    }
    names.iter().map(|n| run_suite(n, cfg)).collect()
}
