//! Walks that avoid one forbidden sub-walk, and how they prolong.
//!
//! The forbidden pattern's last edge leaves a fork v. Appending an edge
//! to a clean walk can only create an occurrence as the new tail
//! window, so the appended edge would have to be the pattern's last
//! edge and the walk would have to sit at v. Consequences checked on a
//! corpus: a clean walk always has a clean one-edge prolongation; away
//! from v every prolongation is clean, so clean walks ending at another
//! fork have exactly two; at v itself at most one prolongation is dirty.

use super::{
    bounded_er_graph, run_corpus, CorpusConfig, CorpusDescriptor, LemmaReport,
    Violation,
};
use crate::digraph::{find_path_occurrence, to_dot, Digraph, Path, VertexId};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::verify::lemmas::MAIN_LEMMA_MAX_ER;

pub struct GoodPathContext<'g> {
    host: &'g Digraph,
    forbidden: Path,
    fork: VertexId,
}

impl<'g> GoodPathContext<'g> {
    /// The pattern must have at least one edge and its last edge must
    /// leave a fork.
    pub fn new(host: &'g Digraph, forbidden: Path) -> Result<Self> {
        let last = forbidden
            .last_edge()
            .ok_or_else(|| Error::PreconditionFailed("pattern has no edges".into()))?;
        let fork = host.edge(last).src;
        if !host.is_fork(fork) {
            return Err(Error::PreconditionFailed(format!(
                "pattern's last edge leaves {:?}, which is not a fork",
                fork
            )));
        }
        Ok(GoodPathContext { host, forbidden, fork })
    }

    pub fn host(&self) -> &Digraph {
        self.host
    }

    pub fn forbidden(&self) -> &Path {
        &self.forbidden
    }

    /// The fork the pattern's last edge leaves.
    pub fn fork(&self) -> VertexId {
        self.fork
    }

    /// A walk is good when the pattern does not occur in it.
    pub fn is_good(&self, p: &Path) -> bool {
        find_path_occurrence(self.host, p, &self.forbidden).is_none()
    }

    /// All one-edge prolongations of a good walk that stay good.
    pub fn good_path_extend(&self, p: &Path) -> Result<Vec<Path>> {
        if !self.is_good(p) {
            return Err(Error::NotGood);
        }
        let end = p.end(self.host);
        Ok(self
            .host
            .out_edges(end)
            .iter()
            .filter_map(|&e| {
                let q = p.extended(self.host, e).expect("out-edge extends the walk");
                self.is_good(&q).then_some(q)
            })
            .collect())
    }
}

/// All good walks with at most `max_vertices` vertices, grown by DFS.
/// Dirty walks stay dirty under extension, so pruning is sound.
fn enumerate_good_walks(ctx: &GoodPathContext, max_vertices: usize) -> Vec<Path> {
    let mut acc = Vec::new();
    let mut stack: Vec<Path> = ctx
        .host()
        .vertices()
        .map(Path::single_vertex)
        .filter(|p| ctx.is_good(p))
        .collect();
    while let Some(p) = stack.pop() {
        if p.len_vertices() < max_vertices {
            for &e in ctx.host().out_edges(p.end(ctx.host())) {
                let q = p.extended(ctx.host(), e).unwrap();
                if ctx.is_good(&q) {
                    stack.push(q);
                }
            }
        }
        acc.push(p);
    }
    acc
}

/// Patterns to test on one host: each fork out-edge alone, then with
/// one and two edges prepended along in-edges.
fn patterns(g: &Digraph) -> Vec<Path> {
    let mut out = Vec::new();
    for fork in g.forks() {
        for &e0 in g.out_edges(fork) {
            out.push(Path::from_edges(g, vec![e0]).unwrap());
            for &d in g.in_edges(fork) {
                out.push(Path::from_edges(g, vec![d, e0]).unwrap());
                for &c in g.in_edges(g.edge(d).src) {
                    out.push(Path::from_edges(g, vec![c, d, e0]).unwrap());
                }
            }
        }
    }
    out
}

fn check_host(g: &Digraph) -> Option<String> {
    for pattern in patterns(g) {
        let ctx = match GoodPathContext::new(g, pattern.clone()) {
            Ok(ctx) => ctx,
            Err(e) => return Some(format!("context rejected a fork pattern: {e}")),
        };
        for p in enumerate_good_walks(&ctx, pattern.len_vertices() + 2) {
            let extensions = match ctx.good_path_extend(&p) {
                Ok(ext) => ext,
                Err(e) => {
                    return Some(format!(
                        "good walk {} rejected: {e}",
                        p.describe(g)
                    ))
                }
            };
            let end = p.end(g);
            let out_deg = g.out_degree(end);
            if extensions.is_empty() {
                return Some(format!(
                    "good walk {} has no good prolongation (pattern {})",
                    p.describe(g),
                    pattern.describe(g)
                ));
            }
            if end != ctx.fork() && extensions.len() != out_deg {
                return Some(format!(
                    "away from the pattern fork, walk {} kept {}/{} prolongations \
                     (pattern {})",
                    p.describe(g),
                    extensions.len(),
                    out_deg,
                    pattern.describe(g)
                ));
            }
            if end != ctx.fork() && g.is_fork(end) && extensions.len() != 2 {
                return Some(format!(
                    "walk {} at a non-pattern fork kept {} prolongations, expected 2",
                    p.describe(g),
                    extensions.len()
                ));
            }
            if end == ctx.fork() && out_deg - extensions.len() > 1 {
                return Some(format!(
                    "walk {} at the pattern fork lost {} prolongations, at most 1 \
                     can be dirty (pattern {})",
                    p.describe(g),
                    out_deg - extensions.len(),
                    pattern.describe(g)
                ));
            }
            for q in &extensions {
                if find_path_occurrence(g, q, ctx.forbidden()).is_some() {
                    return Some(format!(
                        "prolongation {} was reported good but contains the pattern",
                        q.describe(g)
                    ));
                }
            }
        }
    }
    None
}

/// Corpus run of the prolongation properties above.
pub fn run_good_path_corpus(cfg: &CorpusConfig, exec: Exec) -> Result<LemmaReport> {
    let descriptor = CorpusDescriptor {
        kind: "bounded-er-digraph".into(),
        seed: cfg.seed,
        count: cfg.count,
        max_vertices: cfg.max_vertices,
        max_er: Some(MAIN_LEMMA_MAX_ER),
    };
    run_corpus("good-path", descriptor, exec, |item, seed| {
        let g = bounded_er_graph(seed, cfg.max_vertices, MAIN_LEMMA_MAX_ER)?;
        Ok(check_host(&g).map(|witness| Violation {
            item,
            item_seed: seed,
            n_vertices: g.n_vertices(),
            n_edges: g.n_edges(),
            dot: to_dot(&g, "item"),
            witness,
        }))
    })
}
