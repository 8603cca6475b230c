//! Factor graphs of order k: vertices are the length-k factors, edges
//! the length-(k+1) factors, each edge running from its prefix window to
//! its suffix window. Walks spell words, one letter per edge.
//!
//! The module also checks two structural facts at desk scale: the next
//! order's graph equals the line digraph of the current one with the
//! freshly forbidden words pruned, and for uniformly recurrent sequences
//! every order is strongly connected, degenerating to a single cycle
//! exactly in the periodic case.

use crate::digraph::{
    self, is_cycle, line_digraph, strongly_connected, Digraph, Path, VertexId,
};
use crate::error::{Error, Result};
use crate::factors::{self, FactorLanguage};
use crate::obstructions::ObstructionSet;
use crate::words::{Alphabet, SequenceSpec, Word};

#[derive(Clone, Debug)]
pub struct RauzyGraph {
    k: usize,
    alphabet: Alphabet,
    graph: Digraph,
    source: String,
}

impl RauzyGraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Vertex holding the given length-k factor, if it is one.
    pub fn vertex_of(&self, w: &Word) -> Option<VertexId> {
        if w.len() != self.k {
            return None;
        }
        self.graph.vertex_by_label(&self.alphabet.render(w))
    }

    /// The word a walk spells: the start window plus one letter per
    /// edge, |spell(p)| = k + |p| - 1 in vertices.
    pub fn spell(&self, path: &Path) -> Result<Word> {
        let mut w = self.alphabet.parse_word(self.graph.vertex_label(path.start()))?;
        for &e in path.edges() {
            let el = self.alphabet.parse_word(&self.graph.edge(e).label)?;
            w = w.extended(el.letter(el.len() - 1));
        }
        Ok(w)
    }
}

/// Build the order-k factor graph. Needs strata up to k+1.
pub fn build_rauzy(fl: &FactorLanguage, k: usize) -> Result<RauzyGraph> {
    if k + 1 > fl.k_max() {
        return Err(Error::InsufficientStrata { k_max: fl.k_max(), needed: k + 1 });
    }
    let alphabet = fl.alphabet().clone();
    let mut graph = Digraph::new();
    for w in fl.stratum(k) {
        graph.add_vertex(alphabet.render(w));
    }
    let position = |w: &Word| {
        fl.stratum(k)
            .binary_search(w)
            .expect("window of a factor is a factor")
    };
    for w in fl.stratum(k + 1) {
        let src = VertexId(position(&w.prefix(k)) as u32);
        let dst = VertexId(position(&w.suffix(k)) as u32);
        graph.add_edge(src, dst, alphabet.render(w));
    }
    Ok(RauzyGraph { k, alphabet, graph, source: fl.source().to_string() })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct EvolutionReport {
    pub k: usize,
    /// Labels pruned from the line digraph, sorted.
    pub deleted: Vec<String>,
    /// Whether the pruned line digraph matches the order-(k+1) graph
    /// vertex for vertex and edge for edge.
    pub isomorphic: bool,
}

/// Labeled-graph equality up to vertex renaming: same vertex label
/// sets, same (src, dst, label) edge triples. Vertex labels must be
/// unique on both sides for this to be meaningful; factor graphs and
/// their line digraphs satisfy that.
fn labeled_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    let mut va: Vec<&str> = a.vertices().map(|v| a.vertex_label(v)).collect();
    let mut vb: Vec<&str> = b.vertices().map(|v| b.vertex_label(v)).collect();
    va.sort_unstable();
    vb.sort_unstable();
    if va != vb {
        return false;
    }
    let triples = |g: &Digraph| {
        let mut t: Vec<(String, String, String)> = g
            .edge_ids()
            .map(|e| {
                let ed = g.edge(e);
                (
                    g.vertex_label(ed.src).to_string(),
                    g.vertex_label(ed.dst).to_string(),
                    ed.label.clone(),
                )
            })
            .collect();
        t.sort_unstable();
        t
    };
    triples(a) == triples(b)
}

/// One evolution step: prune the edges of the line digraph of the
/// order-k graph whose labels are freshly forbidden words of length
/// k+2, and compare against the order-(k+1) graph built directly.
pub fn check_evolution(
    fl: &FactorLanguage,
    obs: &ObstructionSet,
    k: usize,
) -> Result<EvolutionReport> {
    if obs.n_max() < k + 2 {
        return Err(Error::InsufficientStrata { k_max: obs.n_max(), needed: k + 2 });
    }
    let rk = build_rauzy(fl, k)?;
    let rk1 = build_rauzy(fl, k + 1)?;
    let lifted = line_digraph(rk.graph()).graph;
    let forbidden: Vec<String> = obs
        .of_length(k + 2)
        .iter()
        .map(|w| obs.alphabet().render(w))
        .collect();
    let keep: Vec<digraph::EdgeId> = lifted
        .edge_ids()
        .filter(|&e| forbidden.binary_search(&lifted.edge(e).label).is_err())
        .collect();
    let mut deleted: Vec<String> = lifted
        .edge_ids()
        .filter(|&e| forbidden.binary_search(&lifted.edge(e).label).is_ok())
        .map(|e| lifted.edge(e).label.clone())
        .collect();
    deleted.sort_unstable();
    let all_vertices: Vec<VertexId> = lifted.vertices().collect();
    let (pruned, _) = lifted.subgraph(&all_vertices, &keep);
    let isomorphic = labeled_isomorphic(&pruned, rk1.graph());
    Ok(EvolutionReport { k, deleted, isomorphic })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Prop1Row {
    pub k: usize,
    pub strongly_connected: bool,
    pub is_cycle: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Prop1Report {
    pub spec: String,
    pub periodic: bool,
    pub rows: Vec<Prop1Row>,
    pub all_pass: bool,
}

/// Strong-connectivity scan over orders k_min..=k_max: periodic
/// sequences must give single cycles, everything else strongly
/// connected graphs that are not cycles.
pub fn check_proposition1(
    spec: &SequenceSpec,
    k_min: usize,
    k_max: usize,
) -> Result<Prop1Report> {
    if k_min > k_max {
        return Err(Error::PreconditionFailed(format!(
            "empty order range {k_min}..={k_max}"
        )));
    }
    if !spec.uniformly_recurrent() {
        return Err(Error::PreconditionFailed(
            "factor graph classification needs certified strata; the spec does not \
             guarantee uniform recurrence"
                .into(),
        ));
    }
    let fl = factors::extract_factors(spec, k_max + 1)?;
    let periodic = spec.is_periodic_variant();
    let mut rows = Vec::with_capacity(k_max - k_min + 1);
    for k in k_min..=k_max {
        let rk = build_rauzy(&fl, k)?;
        let sc = strongly_connected(rk.graph())?;
        let cyc = is_cycle(rk.graph());
        let pass = if periodic { cyc } else { sc && !cyc };
        rows.push(Prop1Row { k, strongly_connected: sc, is_cycle: cyc, pass });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(Prop1Report { spec: spec.name().to_string(), periodic, rows, all_pass })
}
