//! The entropy regulator of a digraph: the smallest walk length, counted
//! in vertices, that forces every walk of that length to pass through a
//! fork. Walks may repeat vertices and edges.

use super::{scc, Digraph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ErValue {
    Finite(usize),
    Infinite,
}

impl ErValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, ErValue::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            ErValue::Finite(n) => Some(*n),
            ErValue::Infinite => None,
        }
    }
}

impl std::fmt::Display for ErValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ErValue::Finite(n) => write!(f, "{n}"),
            ErValue::Infinite => write!(f, "inf"),
        }
    }
}

impl serde::Serialize for ErValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ErValue::Finite(n) => s.serialize_u64(*n as u64),
            ErValue::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A walk avoids forks exactly when it stays inside the subgraph induced
/// by the non-fork vertices, so the regulator is one more than the
/// longest walk there: infinite when that subgraph has a cycle, else
/// (longest path in vertices) + 1 by acyclicity.
pub fn entropy_regulator(g: &Digraph) -> Result<ErValue> {
    if g.n_vertices() == 0 {
        return Err(Error::EmptyGraph);
    }
    let non_forks: Vec<VertexId> = g.vertices().filter(|&v| !g.is_fork(v)).collect();
    if non_forks.is_empty() {
        return Ok(ErValue::Finite(1));
    }
    let (h, _) = g.induced_subgraph(&non_forks);
    if has_cycle(&h) {
        return Ok(ErValue::Infinite);
    }
    Ok(ErValue::Finite(longest_path_vertices(&h) + 1))
}

fn has_cycle(g: &Digraph) -> bool {
    g.edge_ids().any(|e| g.edge(e).src == g.edge(e).dst)
        || scc::sccs(g).iter().any(|c| c.len() >= 2)
}

/// Longest directed path in a DAG, measured in vertices.
fn longest_path_vertices(g: &Digraph) -> usize {
    let n = g.n_vertices();
    if n == 0 {
        return 0;
    }
    let mut indeg: Vec<usize> = g.vertices().map(|v| g.in_degree(v)).collect();
    let mut order: Vec<VertexId> =
        g.vertices().filter(|v| indeg[v.index()] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &e in g.out_edges(v) {
            let w = g.edge(e).dst;
            indeg[w.index()] -= 1;
            if indeg[w.index()] == 0 {
                order.push(w);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "graph passed as a DAG has a cycle");
    let mut dp = vec![1usize; n];
    for &v in &order {
        for &e in g.out_edges(v) {
            let w = g.edge(e).dst;
            dp[w.index()] = dp[w.index()].max(dp[v.index()] + 1);
        }
    }
    dp.into_iter().max().unwrap_or(0)
}
