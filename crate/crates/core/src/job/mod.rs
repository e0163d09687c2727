//! The batch front end: a JSON job description in, aligned text tables and a
//! JSON report out.
//!
//! ```json
//! {
//!   "group": {"symmetric": 3},
//!   "ring": {"gf": {"p": 7, "k": 1}},
//!   "action": "trivial",
//!   "subgroups": {"T": ["(1 2)"]},
//!   "task": {"decompose": {"j": "T", "k": "T", "h": "G"}}
//! }
//! ```
//!
//! Subgroups are given by generator lists, each generator an element index
//! or label (cycle notation for symmetric groups). The names `G` and `1`
//! denote the whole and the trivial subgroup unless redeclared.

mod tasks;
mod text;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::group::{FiniteGroup, GroupSpec, Subgroup, DEFAULT_SUBGROUP_BOUND};
use crate::ring::{FiniteRing, RingSpec};
use crate::twisted::gring::{ActionSpec, GRing};

pub use text::Table;

/// One job, as read from a JSON file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSpec>,
    #[serde(default = "trivial_action")]
    pub action: ActionSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subgroups: BTreeMap<String, Vec<ElementRef>>,
    pub task: Task,
    #[serde(default)]
    pub options: JobOptions,
}

fn trivial_action() -> ActionSpec {
    ActionSpec::Trivial
}

/// An element index or label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

/// A declared subgroup name or an inline generator list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubgroupRef {
    Name(String),
    Generators(Vec<ElementRef>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    /// Build a Mackey functor and run the MF0 to MF6 checks.
    VerifyMackey { instance: Instance },
    /// Wedderburn blocks and `K₀` rank of `R_θ[H]` for every subgroup.
    K0,
    /// Table of marks, products of transitive G-sets and Burnside hom ranks.
    Burnside,
    /// `J\H/K` with the cardinality identity and the refined transversal.
    DoubleCosets { j: SubgroupRef, k: SubgroupRef, h: SubgroupRef },
    /// The map `R_θ[H] → End_{R^H}(R)` for every subgroup.
    Auslander,
    /// The explicit isomorphism behind the double coset formula.
    Decompose { j: SubgroupRef, k: SubgroupRef, h: SubgroupRef },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Instance {
    /// `K₀(R_θ[-])`.
    K0,
    /// `K₀(End_{R^-}(R))`, compared with `K₀(R_θ[-])` through the Auslander maps.
    Endomorphism,
    /// The Burnside ring functor.
    Burnside,
    /// Units of the fixed subfields.
    Units,
    /// `M(H) = Z` with identity maps; fails the decomposition axiom.
    Constant,
    /// `K_{2i−1}` of the fixed subfields from Quillen's formulas; external data.
    Quillen { degree: u32 },
    /// `K₀(R_θ[-])` against untwisted group algebras, for trivial actions.
    DressKuku,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct JobOptions {
    /// Bound on `|G|`; the smaller of this and the command line bound applies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_group_order: Option<usize>,
    /// Where to write the JSON report when the command line gives no path.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

/// Process-level settings from the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub max_group_order: usize,
    pub allow_external_data: bool,
    /// Record wall-clock timings; off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { max_group_order: DEFAULT_SUBGROUP_BOUND, allow_external_data: false, timings: false }
    }
}

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExitStatus {
    Pass = 0,
    CheckFailed = 1,
    Invalid = 2,
    Unsupported = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// A job that stopped before producing a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobError {
    pub status: ExitStatus,
    pub message: String,
    /// Line and column in the job file, for parse errors.
    pub location: Option<(usize, usize)>,
}

impl std::fmt::Display for JobError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.location {
            Some((line, column)) => write!(f, "line {line}, column {column}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for JobError {}

impl JobError {
    fn invalid(message: impl Into<String>) -> Self {
        Self { status: ExitStatus::Invalid, message: message.into(), location: None }
    }
}

impl From<Error> for JobError {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Unsupported(_) => ExitStatus::Unsupported,
            Error::InvalidGroup(_)
            | Error::NotAssociative(..)
            | Error::GroupTooLarge { .. }
            | Error::Containment(_)
            | Error::NotInSubgroup(_)
            | Error::InvalidRing(_)
            | Error::Reducible { .. }
            | Error::NotAutomorphism(_)
            | Error::OrderNotInvertible { .. }
            | Error::GroupMismatch(_) => ExitStatus::Invalid,
            _ => ExitStatus::CheckFailed,
        };
        let message = match &e {
            Error::OrderNotInvertible { .. } => {
                format!("{e} (hypothesis: |G| is invertible in R, or G acts faithfully on a field)")
            }
            _ => e.to_string(),
        };
        Self { status, message, location: None }
    }
}

/// Parses a job file, reporting the line and column of any syntax or schema
/// error.
pub fn parse_job(source: &str) -> Result<JobSpec, JobError> {
    serde_json::from_str(source).map_err(|e| JobError {
        status: ExitStatus::Invalid,
        message: e.to_string(),
        location: Some((e.line(), e.column())),
    })
}

/// One pass/fail line of the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    fn new(check: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { check: check.into(), pass, detail: detail.into() }
    }
}

/// The machine-readable report.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub spec_echo: JobSpec,
    pub results: serde_json::Value,
    pub verdicts: Vec<Verdict>,
    /// Milliseconds per phase; empty unless timings were requested.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// A finished job.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub status: ExitStatus,
}

/// What a task hands back: JSON results, text sections and verdicts.
pub(crate) struct TaskOutput {
    pub results: serde_json::Value,
    pub sections: Vec<String>,
    pub verdicts: Vec<Verdict>,
}

/// The group, its optional G-ring and the name table shared by all tasks.
pub(crate) struct Context {
    pub group: Arc<FiniteGroup>,
    pub bound: usize,
    pub named: BTreeMap<String, Subgroup>,
    spec: JobSpec,
    base: Option<Result<Arc<GRing>, Error>>,
}

impl Context {
    fn new(spec: &JobSpec, config: &RunConfig) -> Result<Self, JobError> {
        let bound = spec.options.max_group_order.map_or(config.max_group_order, |b| b.min(config.max_group_order));
        let group = Arc::new(FiniteGroup::build(&spec.group)?);
        if group.order() > bound {
            return Err(Error::GroupTooLarge { order: group.order(), bound }.into());
        }
        let mut named = BTreeMap::new();
        named.insert("G".to_string(), Subgroup::whole(&group));
        named.insert("1".to_string(), Subgroup::trivial(&group));
        for (name, gens) in &spec.subgroups {
            let gens = gens.iter().map(|g| resolve_element(&group, g)).collect::<Result<Vec<_>, _>>()?;
            named.insert(name.clone(), Subgroup::generated(&group, &gens));
        }
        let base = spec.ring.as_ref().map(|r| {
            let ring = Arc::new(FiniteRing::build(r)?);
            GRing::new(ring, Arc::clone(&group), &spec.action).map(Arc::new)
        });
        Ok(Self { group, bound, named, spec: spec.clone(), base })
    }

    pub fn base(&self) -> Result<Arc<GRing>, JobError> {
        match &self.base {
            Some(Ok(b)) => Ok(Arc::clone(b)),
            Some(Err(e)) => Err(e.clone().into()),
            None => Err(JobError::invalid("this task needs a \"ring\"")),
        }
    }

    pub fn spec(&self) -> &JobSpec {
        &self.spec
    }

    pub fn subgroup(&self, r: &SubgroupRef) -> Result<Subgroup, JobError> {
        match r {
            SubgroupRef::Name(n) => self.named.get(n).cloned().ok_or_else(|| JobError::invalid(format!("undeclared subgroup \"{n}\""))),
            SubgroupRef::Generators(gens) => {
                let gens = gens.iter().map(|g| resolve_element(&self.group, g)).collect::<Result<Vec<_>, _>>()?;
                Ok(Subgroup::generated(&self.group, &gens))
            }
        }
    }
}

fn resolve_element(group: &FiniteGroup, r: &ElementRef) -> Result<usize, JobError> {
    match r {
        ElementRef::Index(i) if *i < group.order() => Ok(*i),
        ElementRef::Index(i) => Err(JobError::invalid(format!("element index {i} is outside a group of order {}", group.order()))),
        ElementRef::Label(s) => group.find_element(s).ok_or_else(|| JobError::invalid(format!("unknown element \"{s}\""))),
    }
}

/// Runs one job. Errors are returned only when no report can be produced.
pub fn run(spec: &JobSpec, config: &RunConfig) -> Result<Outcome, JobError> {
    let mut timings = BTreeMap::new();
    let start = Instant::now();
    let ctx = Context::new(spec, config)?;
    let built = start.elapsed();
    let start = Instant::now();
    let output = tasks::execute(&ctx, config)?;
    let ran = start.elapsed();
    if config.timings {
        timings.insert("build".to_string(), built.as_secs_f64() * 1e3);
        timings.insert("task".to_string(), ran.as_secs_f64() * 1e3);
    }
    let status = if output.verdicts.iter().all(|v| v.pass) { ExitStatus::Pass } else { ExitStatus::CheckFailed };
    let text = text::render(&ctx, &output, &timings);
    let report = Report { spec_echo: spec.clone(), results: output.results, verdicts: output.verdicts, timings };
    Ok(Outcome { report, text, status })
}

/// Parses and runs a job file's contents.
pub fn run_source(source: &str, config: &RunConfig) -> Result<Outcome, JobError> {
    run(&parse_job(source)?, config)
}
