//! Directed line graphs and their iterates.
//!
//! The line digraph f(g) has one vertex per edge of g and one edge per
//! pair of consecutive edges, so |V(f(g))| = |E(g)| and |E(f(g))| is the
//! sum of in-degree times out-degree over the vertices of g. Iterating
//! keeps the walk correspondence explicit: a vertex of f^m(g) is a walk
//! in g with m edges, an edge of f^m(g) a walk with m+1 edges.

use super::{Digraph, EdgeId, Path, VertexId};
use crate::error::{Error, Result};

/// Default ceiling on the size of any computed iterate.
pub const DEFAULT_LINE_BUDGET: usize = 1_000_000;

#[derive(Debug)]
pub struct LineDigraph {
    pub graph: Digraph,
    /// New vertex id -> the edge of the base graph it came from.
    pub vertex_origin: Vec<EdgeId>,
    /// New edge id -> the consecutive edge pair it came from.
    pub edge_origin: Vec<(EdgeId, EdgeId)>,
}

/// Labels of consecutive edges that overlap like sliding windows of a
/// word merge into the longer window; anything else joins with a bar.
fn merge_labels(u: &str, v: &str) -> String {
    let a: Vec<char> = u.chars().collect();
    let b: Vec<char> = v.chars().collect();
    if !a.is_empty() && a.len() == b.len() && a[1..] == b[..b.len() - 1] {
        let mut s = u.to_string();
        s.push(b[b.len() - 1]);
        s
    } else {
        format!("{u}|{v}")
    }
}

pub fn line_digraph(g: &Digraph) -> LineDigraph {
    let mut out = Digraph::new();
    for e in g.edge_ids() {
        out.add_vertex(g.edge(e).label.clone());
    }
    let mut edge_origin = Vec::new();
    for e1 in g.edge_ids() {
        let mid = g.edge(e1).dst;
        for &e2 in g.out_edges(mid) {
            let label = merge_labels(&g.edge(e1).label, &g.edge(e2).label);
            out.add_edge(VertexId(e1.0), VertexId(e2.0), label);
            edge_origin.push((e1, e2));
        }
    }
    LineDigraph { graph: out, vertex_origin: g.edge_ids().collect(), edge_origin }
}

#[derive(Debug)]
pub struct IteratedLineDigraph {
    pub graph: Digraph,
    /// Walk in the base graph behind each vertex: m edges, m+1 vertices.
    pub vertex_paths: Vec<Path>,
    /// Walk behind each edge: m+1 edges.
    pub edge_paths: Vec<Path>,
}

/// The m-th line-digraph iterate, with the walk correspondence into the
/// base graph. Sizes are estimated before each step; exceeding `budget`
/// aborts without allocating.
pub fn iterate_line_digraph(
    g: &Digraph,
    m: usize,
    budget: usize,
) -> Result<IteratedLineDigraph> {
    let mut cur = g.clone();
    let mut vertex_paths: Vec<Path> = g.vertices().map(Path::single_vertex).collect();
    let mut edge_paths: Vec<Path> = g
        .edge_ids()
        .map(|e| Path::from_edges(g, vec![e]).expect("single edge is a walk"))
        .collect();
    for _ in 0..m {
        let next_v = cur.n_edges();
        let next_e: usize = cur
            .vertices()
            .map(|v| cur.in_degree(v) * cur.out_degree(v))
            .sum();
        let estimate = next_v.max(next_e);
        if estimate > budget {
            return Err(Error::BudgetExceeded { estimate, budget });
        }
        let ld = line_digraph(&cur);
        vertex_paths = ld
            .vertex_origin
            .iter()
            .map(|&e| edge_paths[e.index()].clone())
            .collect();
        edge_paths = ld
            .edge_origin
            .iter()
            .map(|&(e1, e2)| {
                // The two walks overlap in all but one edge, so gluing is
                // appending the second walk's last edge.
                let tail = edge_paths[e2.index()]
                    .last_edge()
                    .expect("iterate edge walks are nonempty");
                edge_paths[e1.index()]
                    .extended(g, tail)
                    .expect("consecutive iterate edges glue in the base graph")
            })
            .collect();
        cur = ld.graph;
    }
    Ok(IteratedLineDigraph { graph: cur, vertex_paths, edge_paths })
}
