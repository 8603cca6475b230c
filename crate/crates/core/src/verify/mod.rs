//! Property verification at desk scale: each structural claim the
//! library relies on gets a checker that either certifies it on a
//! reproducible corpus or reports concrete counterexamples, never
//! silently narrowing the claim.

mod corpus;
mod good_path;
mod lemmas;
mod sequences;

pub use corpus::{bounded_er_graph, item_seed, random_sc_digraph, CorpusConfig};
pub use good_path::{run_good_path_corpus, GoodPathContext};
pub use lemmas::{
    check_corollary_main, check_lemma_del_edge, check_lemma_evol, check_main_lemma,
    run_corollary_main_corpus, run_lemma_del_edge_corpus, run_lemma_evol_corpus,
    run_main_lemma_corpus, DelEdgeCase, DelEdgeOutcome, DeletionSearchOutcome,
    EvolOutcome, MAIN_LEMMA_MAX_ER,
};
pub use sequences::{
    check_corollary_er, check_theorem, CorollaryErReport, CorollaryErRow,
    TheoremReport, TheoremRow,
};

use crate::error::Result;
use crate::exec::{self, Exec};

/// What a corpus run actually drew, echoed into every report.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CorpusDescriptor {
    pub kind: String,
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_er: Option<usize>,
}

/// A corpus item that falsified a claim, with enough context to replay
/// it: the item seed regenerates the graph, the DOT text shows it.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Violation {
    pub item: usize,
    pub item_seed: u64,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub dot: String,
    pub witness: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub corpus: CorpusDescriptor,
    pub passes: usize,
    pub violations: Vec<Violation>,
}

impl LemmaReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Shared corpus loop: generate item graphs from per-item seeds, run a
/// check on each, gather violations. Items run in parallel under
/// `Exec::Auto`; order and content of the result do not depend on the
/// execution mode.
pub(crate) fn run_corpus<F>(
    lemma: &str,
    corpus: CorpusDescriptor,
    exec: Exec,
    check: F,
) -> Result<LemmaReport>
where
    F: Fn(usize, u64) -> Result<Option<Violation>> + Sync + Send,
{
    let outcomes = exec::map_range(exec, corpus.count, |i| {
        check(i, item_seed(corpus.seed, i))
    });
    let mut violations = Vec::new();
    for outcome in outcomes {
        if let Some(v) = outcome? {
            violations.push(v);
        }
    }
    Ok(LemmaReport {
        lemma: lemma.to_string(),
        passes: corpus.count - violations.len(),
        corpus,
        violations,
    })
}
