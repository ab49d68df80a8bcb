//! Batch classification of graphs against the Gallai-type bounds and the
//! named verification suites behind the `check` subcommand.

mod instances;
mod suites;

pub use instances::{random_decomposition, random_graph};
pub use suites::{
    family_instances, random_set_graphs_of_order, run_suite, strong_set_property, Suite, SuiteOutcome, SuiteParams,
    SuiteSummary,
};

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::decomposition::{gallai_status, GallaiStatus};
use crate::graph::{
    canonical_form, complete_to_family_g_with, even_subgraph, in_family_g, CompletionBudget,
    CompletionOutcome, SimpleGraph, MAX_CANON_VERTICES,
};
use crate::io::emit_graph6;
use crate::set_eset::{classify_eset, EsetKind};
use crate::solver::{pn_exact, DEFAULT_TIMEOUT_MS};

pub const REPORT_VERSION: u32 = 1;

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 2;
pub const EXIT_TIMEOUTS: i32 = 3;

/// Violations dominate timeouts.
pub fn exit_code(violations: usize, timeouts: usize) -> i32 {
    if violations > 0 {
        EXIT_VIOLATIONS
    } else if timeouts > 0 {
        EXIT_TIMEOUTS
    } else {
        EXIT_CLEAN
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyBudget {
    pub timeout_ms: u64,
    pub completion: CompletionBudget,
    /// Leave out wall-clock timings so reports are byte-stable.
    pub deterministic: bool,
}

impl Default for ClassifyBudget {
    fn default() -> Self {
        ClassifyBudget {
            timeout_ms: DEFAULT_TIMEOUT_MS,
            completion: CompletionBudget::default(),
            deterministic: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyVerdict {
    /// The E-subgraph itself is in the family.
    Yes,
    /// No supergraph of it can be.
    No,
    /// A completion was found within the budget.
    WitnessFound,
    /// Budget ran out.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationRecord {
    pub v: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub graph_id: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Size of the best decomposition found; the path number when
    /// `pn_exact`.
    pub pn: usize,
    pub pn_exact: bool,
    pub lower_bound: usize,
    pub gallai_status: GallaiStatus,
    pub is_odd_semi_clique: bool,
    pub is_set: bool,
    pub eset_kind: EsetKind,
    pub ev_max_degree: usize,
    pub ev_in_family_g: FamilyVerdict,
    pub theorem31_applicable: bool,
    pub theorem41_applicable: bool,
    /// `None` when no theorem applies, or when the search timed out and the
    /// decomposition found does not settle the question.
    pub theorem_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    /// The decomposition found, attached to counterexamples only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl ClassificationRecord {
    pub fn is_violation(&self) -> bool {
        self.theorem_holds == Some(false)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Hex SHA-256 of the canonical form, so isomorphic inputs share an id.
/// Beyond the canonical-form size limit the labelled graph6 string is
/// hashed instead, behind a `labelled:` prefix.
pub fn graph_id(g: &SimpleGraph) -> String {
    let mut h = Sha256::new();
    if g.n() <= MAX_CANON_VERTICES {
        h.update(canonical_form(g).expect("size checked"));
    } else {
        h.update(b"labelled:");
        h.update(emit_graph6(g).unwrap_or_default());
    }
    hex::encode(h.finalize())
}

pub fn ev_family_verdict(ev: &SimpleGraph, budget: CompletionBudget) -> FamilyVerdict {
    if in_family_g(ev) {
        return FamilyVerdict::Yes;
    }
    match complete_to_family_g_with(ev, budget) {
        CompletionOutcome::Found { .. } => FamilyVerdict::WitnessFound,
        CompletionOutcome::DefiniteNo(_) => FamilyVerdict::No,
        CompletionOutcome::NotFound { .. } => FamilyVerdict::Unknown,
    }
}

pub fn classify(g: &SimpleGraph, budget: &ClassifyBudget) -> ClassificationRecord {
    let start = Instant::now();
    let n = g.n();
    let solved = pn_exact(g, budget.timeout_ms);
    let ev = even_subgraph(g);
    let ev_in_family_g = ev_family_verdict(&ev.ev_graph, budget.completion);
    let eset_kind = classify_eset(g).kind;
    let is_set = eset_kind == EsetKind::TypeSet;
    let status = gallai_status(n, solved.pn);

    let theorem31_applicable = ev.max_e_degree <= 3;
    let theorem41_applicable = matches!(ev_in_family_g, FamilyVerdict::Yes | FamilyVerdict::WitnessFound);
    let settled = (status == GallaiStatus::Gallai || is_set) && solved.pn <= n.div_ceil(2);
    let theorem_holds = if !(theorem31_applicable || theorem41_applicable) {
        None
    } else if settled {
        Some(true)
    } else if solved.is_exact() {
        Some(false)
    } else {
        None
    };

    ClassificationRecord {
        v: REPORT_VERSION,
        label: None,
        graph_id: graph_id(g),
        graph6: emit_graph6(g).unwrap_or_default(),
        n,
        m: g.m(),
        pn: solved.pn,
        pn_exact: solved.is_exact(),
        lower_bound: solved.best_lower_bound,
        gallai_status: status,
        is_odd_semi_clique: g.is_odd_semi_clique(),
        is_set,
        eset_kind,
        ev_max_degree: ev.max_e_degree,
        ev_in_family_g,
        theorem31_applicable,
        theorem41_applicable,
        theorem_holds,
        elapsed_ms: (!budget.deterministic).then(|| start.elapsed().as_millis() as u64),
        witness: (theorem_holds == Some(false)).then(|| solved.witness.to_json_value()),
    }
}

/// Classifies in parallel, returning records in input order.
pub fn classify_all(graphs: &[SimpleGraph], budget: &ClassifyBudget) -> Vec<ClassificationRecord> {
    graphs.par_iter().map(|g| classify(g, budget)).collect()
}
