//! Exhaustive desk-scale sweeps over vertex-split regular Class 1 graphs.
//!
//! A sweep enumerates every connected `Δ`-regular graph of even order
//! `m <= m_max` in the requested degree range, keeps the Class 1 ones,
//! applies every canonical splitting at every vertex, deduplicates the
//! resulting graphs up to isomorphism and checks each one. The same
//! universe feeds the lemma suites.

mod enumerate;
mod lemma_suite;
mod report;
mod sweep;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chromatic::Budget;
use crate::graph::{Edge, Graph, SplitSpec, Vertex};
use crate::structures::{Lemma, LemmaViolation};

pub use enumerate::{enumerate_regular, filter_class1, ClassFilter, EnumerationSpec};
pub use lemma_suite::{run_lemma_suites, EXHAUSTIVE_NODE_LIMIT};
pub use sweep::{verify_conjecture, verify_theorem1};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("infeasible specification: {0}")]
    InfeasibleSpec(String),
    #[error("node budget of {nodes} exhausted while enumerating {what}")]
    BudgetExceeded { what: String, nodes: u64 },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Run parameters shared by every sweep.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest (even) base order.
    pub m_max: usize,
    /// Worker threads; `None` uses every available CPU.
    pub workers: Option<usize>,
    /// Node budget for each exact coloring search; `None` applies
    /// [`Budget::default_for`] to each graph.
    pub budget_nodes: Option<u64>,
    /// Node budget for each regular-graph enumeration.
    pub enumeration_budget: Option<u64>,
    pub seed: u64,
    /// Colorings sampled per edge when a universe is too large to list.
    pub samples: usize,
    /// Record wall-clock times (makes reports run-dependent).
    pub timings: bool,
}

impl VerifyConfig {
    pub fn new(m_max: usize) -> Self {
        VerifyConfig {
            m_max,
            workers: None,
            budget_nodes: None,
            enumeration_budget: None,
            seed: 0,
            samples: 1000,
            timings: false,
        }
    }

    pub fn budget_for(&self, g: &Graph) -> Budget {
        match self.budget_nodes {
            Some(n) => Budget(Some(n)),
            None => Budget::default_for(g),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Theorem1,
    Conjecture,
    Lemmas,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Theorem1 => "theorem1",
            Mode::Conjecture => "conjecture",
            Mode::Lemmas => "lemmas",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Incomplete,
}

impl Verdict {
    /// 0 pass, 1 violation found, 2 incomplete.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Incomplete => 2,
        }
    }
}

/// Where a split graph sits relative to the degree thresholds. `n` is the
/// split graph's order `m + 1`; the conjecture bound is recorded for both
/// `n` and the base order `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    pub base_order: usize,
    pub split_order: usize,
    pub delta: usize,
    /// `Δ >= (2n - 4) / 3`.
    pub theorem: bool,
    /// `Δ > n / 3`.
    pub conjecture_split_order: bool,
    /// `Δ > m / 3`.
    pub conjecture_base_order: bool,
}

impl Thresholds {
    pub fn new(base_order: usize, delta: usize) -> Self {
        let n = base_order + 1;
        Thresholds {
            base_order,
            split_order: n,
            delta,
            theorem: 3 * delta + 4 >= 2 * n,
            conjecture_split_order: 3 * delta > n,
            conjecture_base_order: 3 * delta > base_order,
        }
    }

    pub fn tag(&self) -> RangeTag {
        if self.theorem {
            RangeTag::Theorem
        } else if self.conjecture_split_order {
            RangeTag::BeyondTheorem
        } else {
            RangeTag::BaseOrderOnly
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum RangeTag {
    Theorem,
    /// `Δ > n / 3` but outside the theorem's range.
    BeyondTheorem,
    /// Only admitted when the conjecture's bound is read as `Δ > m / 3`.
    BaseOrderOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Undecided,
}

/// Regular graphs of one `(m, Δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeClass {
    pub order: usize,
    pub delta: usize,
    pub thresholds: Thresholds,
    pub generated: usize,
    pub class1: usize,
    pub class2: usize,
    pub undecided: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseRecord {
    pub order: usize,
    pub delta: usize,
    pub graph6: String,
    /// Canonical splittings over all vertices.
    pub splittings: usize,
    /// Split graphs left after isomorph rejection.
    pub distinct: usize,
}

/// One split graph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitInstance {
    pub base_graph6: String,
    /// First splitting (by vertex, then spec order) producing this class.
    pub split: SplitSpec,
    /// Splittings of the base graph producing an isomorphic graph.
    pub multiplicity: usize,
    pub split_graph6: String,
    pub thresholds: Thresholds,
    pub tag: RangeTag,
    pub overfull: bool,
    pub class_two: Option<bool>,
    /// `d(a) + d(b) = Δ + 2` for the split pair.
    pub full_deficiency_pair: bool,
    pub delta_critical: Option<bool>,
    pub non_critical_edges: Vec<Edge>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    NotOverfull {
        split_graph6: String,
    },
    NotClassTwo {
        split_graph6: String,
    },
    NotFullDeficiency {
        split_graph6: String,
        pair: (Vertex, Vertex),
    },
    NotDeltaCritical {
        split_graph6: String,
        non_critical_edges: Vec<Edge>,
    },
    Lemma(LemmaViolation),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub base_graphs: usize,
    pub class1: usize,
    pub class2: usize,
    pub undecided_bases: usize,
    pub splittings_enumerated: usize,
    pub split_graphs_tested: usize,
    pub overfull: usize,
    pub class_two: usize,
    pub delta_critical: usize,
    pub theorem_instances: usize,
    pub beyond_theorem_instances: usize,
    pub theorem_passed: usize,
    pub beyond_theorem_passed: usize,
    pub base_order_only_instances: usize,
    pub base_order_only_passed: usize,
}

/// Per-lemma totals of a lemma-suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaTally {
    pub lemma: Lemma,
    /// Configurations on which the conclusion was evaluated.
    pub checks: u64,
    pub violations: u64,
}

/// One (split graph, edge) coloring universe in a lemma-suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaRun {
    pub split_graph6: String,
    pub edge: Edge,
    /// Size of the edge's orbit under automorphisms.
    pub orbit: usize,
    pub split_pair: bool,
    pub critical: Option<bool>,
    pub exhaustive: bool,
    pub colorings: u64,
    pub multi_fan_checks: u64,
    pub kierstead_checks: u64,
    pub double_kierstead_checks: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub graphs: usize,
    pub tallies: Vec<LemmaTally>,
    pub runs: Vec<LemmaRun>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub enumerate_ms: u64,
    pub split_ms: u64,
    pub check_ms: u64,
    pub total_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub m_max: usize,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub budget_nodes: Option<u64>,
    pub verdict: Verdict,
    pub counts: Counts,
    pub degree_classes: Vec<DegreeClass>,
    pub bases: Vec<BaseRecord>,
    pub instances: Vec<SplitInstance>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lemmas: Option<LemmaReport>,
    pub violations: Vec<Violation>,
    /// Failures among `BASE-ORDER-ONLY` instances. They are reported but do
    /// not affect the verdict.
    pub base_order_findings: Vec<Violation>,
    pub undecided: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

impl VerificationReport {
    fn settle_verdict(&mut self) {
        self.verdict = if !self.violations.is_empty() {
            Verdict::Fail
        } else if !self.undecided.is_empty() {
            Verdict::Incomplete
        } else {
            Verdict::Pass
        };
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn check_bound(m_max: usize) -> Result<(), VerifyError> {
    if m_max < 4 || m_max % 2 == 1 {
        return Err(VerifyError::InfeasibleSpec(format!(
            "order bound must be even and at least 4, got {m_max}"
        )));
    }
    Ok(())
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool, VerifyError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        b = b.num_threads(w.max(1));
    }
    b.build().map_err(|e| VerifyError::Pool(e.to_string()))
}
