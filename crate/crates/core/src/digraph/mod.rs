//! Directed multigraphs with labeled vertices and edges.
//!
//! Dense u32 ids, insertion-ordered adjacency, and index-preserving
//! iteration keep every downstream computation deterministic. Subgraph
//! operations re-index into a fresh dense graph and return a
//! [`SubgraphMap`] carrying the new-id to old-id correspondence; labels
//! travel with the vertices and edges they name.

mod dot;
mod er;
mod line;
mod path;
mod scc;

pub use dot::to_dot;
pub use er::{entropy_regulator, ErValue};
pub use line::{
    iterate_line_digraph, line_digraph, IteratedLineDigraph, LineDigraph,
    DEFAULT_LINE_BUDGET,
};
pub use path::{find_path_occurrence, Path};
pub use scc::{is_cycle, reachable_from, sccs, strongly_connected};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct EdgeId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub label: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    out: Vec<Vec<EdgeId>>,
    inc: Vec<Vec<EdgeId>>,
}

impl Digraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> VertexId {
        let id = VertexId(self.labels.len() as u32);
        self.labels.push(label.into());
        self.out.push(Vec::new());
        self.inc.push(Vec::new());
        id
    }

    pub fn add_edge(
        &mut self,
        src: VertexId,
        dst: VertexId,
        label: impl Into<String>,
    ) -> EdgeId {
        let id = EdgeId(self.edges.len() as u32);
        self.edges.push(Edge { src, dst, label: label.into() });
        self.out[src.index()].push(id);
        self.inc[dst.index()].push(id);
        id
    }

    /// Build from (src, dst) vertex-label pairs; vertices are created in
    /// first-appearance order.
    pub fn from_edge_list(pairs: &[(&str, &str)]) -> Self {
        let mut g = Self::new();
        let mut ids = std::collections::HashMap::new();
        let mut vertex = |g: &mut Self, name: &str| {
            *ids.entry(name.to_string()).or_insert_with(|| g.add_vertex(name))
        };
        for &(s, d) in pairs {
            let sv = vertex(&mut g, s);
            let dv = vertex(&mut g, d);
            g.add_edge(sv, dv, format!("{s}>{d}"));
        }
        g
    }

    /// Edges as (src label, dst label) pairs in edge-id order.
    pub fn edge_list(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|e| {
                (self.labels[e.src.index()].clone(), self.labels[e.dst.index()].clone())
            })
            .collect()
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v.index()]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.inc[v.index()]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v.index()].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.inc[v.index()].len()
    }

    pub fn is_fork(&self, v: VertexId) -> bool {
        self.out_degree(v) >= 2
    }

    /// Vertices with at least two out-edges, ascending.
    pub fn forks(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.is_fork(v)).collect()
    }

    /// Find a vertex by label (labels need not be unique; first match).
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(|i| VertexId(i as u32))
    }

    pub fn edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.label == label).map(|i| EdgeId(i as u32))
    }

    /// Copy with one edge removed; all vertices survive.
    pub fn without_edge(&self, removed: EdgeId) -> (Digraph, SubgraphMap) {
        let keep: Vec<EdgeId> = self.edge_ids().filter(|&e| e != removed).collect();
        self.subgraph(&self.vertices().collect::<Vec<_>>(), &keep)
    }

    /// Induced subgraph: the given vertices plus every edge with both
    /// endpoints among them (edges kept in original id order).
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (Digraph, SubgraphMap) {
        let inside = self.vertex_mask(vertices);
        let edges: Vec<EdgeId> = self
            .edge_ids()
            .filter(|&e| {
                let ed = self.edge(e);
                inside[ed.src.index()] && inside[ed.dst.index()]
            })
            .collect();
        self.subgraph(vertices, &edges)
    }

    /// Subgraph spanned by the given edges: their endpoints become the
    /// vertex set (ascending original id).
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> (Digraph, SubgraphMap) {
        let mut seen = vec![false; self.n_vertices()];
        for &e in edges {
            seen[self.edge(e).src.index()] = true;
            seen[self.edge(e).dst.index()] = true;
        }
        let vertices: Vec<VertexId> =
            self.vertices().filter(|v| seen[v.index()]).collect();
        self.subgraph(&vertices, edges)
    }

    /// Re-index the given vertices and edges into a dense graph. Every
    /// edge endpoint must be listed among the vertices.
    pub fn subgraph(&self, vertices: &[VertexId], edges: &[EdgeId]) -> (Digraph, SubgraphMap) {
        let mut new_of = vec![u32::MAX; self.n_vertices()];
        let mut g = Digraph::new();
        for &v in vertices {
            new_of[v.index()] = g.add_vertex(self.vertex_label(v).to_string()).0;
        }
        let mut edge_back = Vec::with_capacity(edges.len());
        for &e in edges {
            let ed = self.edge(e);
            let s = new_of[ed.src.index()];
            let d = new_of[ed.dst.index()];
            assert!(s != u32::MAX && d != u32::MAX, "edge endpoint not in vertex set");
            g.add_edge(VertexId(s), VertexId(d), ed.label.clone());
            edge_back.push(e);
        }
        (g, SubgraphMap { vertex_back: vertices.to_vec(), edge_back })
    }

    /// Delete one out-edge of a fork, then restrict to what stays
    /// reachable from that fork. The fork keeps an out-edge, so it is
    /// always part of the result.
    pub fn delete_edge_reachable(&self, e: EdgeId) -> Result<(Digraph, SubgraphMap)> {
        let src = self.edge(e).src;
        if !self.is_fork(src) {
            return Err(Error::NotAFork { edge: e });
        }
        let reach = scc::reachable_avoiding(self, src, e);
        let inside = self.vertex_mask(&reach);
        let edges: Vec<EdgeId> = self
            .edge_ids()
            .filter(|&f| {
                let ed = self.edge(f);
                f != e && inside[ed.src.index()] && inside[ed.dst.index()]
            })
            .collect();
        Ok(self.subgraph(&reach, &edges))
    }

    fn vertex_mask(&self, vertices: &[VertexId]) -> Vec<bool> {
        let mut mask = vec![false; self.n_vertices()];
        for &v in vertices {
            mask[v.index()] = true;
        }
        mask
    }
}

/// New-id to old-id correspondence for a subgraph.
#[derive(Clone, Debug)]
pub struct SubgraphMap {
    vertex_back: Vec<VertexId>,
    edge_back: Vec<EdgeId>,
}

impl SubgraphMap {
    pub fn original_vertex(&self, v: VertexId) -> VertexId {
        self.vertex_back[v.index()]
    }

    pub fn original_edge(&self, e: EdgeId) -> EdgeId {
        self.edge_back[e.index()]
    }
}

/// The order-1 factor graph of the Fibonacci sequence: vertices a, b and
/// edges aa, ab, ba. Small enough to be a fixture in several test files.
#[cfg(test)]
pub(crate) fn fib_r1() -> Digraph {
    let mut g = Digraph::new();
    let a = g.add_vertex("a");
    let b = g.add_vertex("b");
    g.add_edge(a, a, "aa");
    g.add_edge(a, b, "ab");
    g.add_edge(b, a, "ba");
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_assigns_dense_ids() {
        let g = fib_r1();
        assert_eq!(g.n_vertices(), 2);
        assert_eq!(g.n_edges(), 3);
        assert_eq!(g.vertex_label(VertexId(0)), "a");
        assert_eq!(g.edge(EdgeId(1)).label, "ab");
        assert_eq!(g.out_edges(VertexId(0)), &[EdgeId(0), EdgeId(1)]);
        assert_eq!(g.in_edges(VertexId(0)), &[EdgeId(0), EdgeId(2)]);
        assert_eq!(g.out_degree(VertexId(1)), 1);
        assert_eq!(g.in_degree(VertexId(1)), 1);
    }

    #[test]
    fn forks_are_high_out_degree_vertices() {
        let g = fib_r1();
        assert_eq!(g.forks(), vec![VertexId(0)]);
        assert!(g.is_fork(VertexId(0)));
        assert!(!g.is_fork(VertexId(1)));
    }

    #[test]
    fn edge_list_round_trips_through_labels() {
        let g = Digraph::from_edge_list(&[("x", "y"), ("y", "x"), ("x", "x")]);
        assert_eq!(g.n_vertices(), 2);
        assert_eq!(
            g.edge_list(),
            vec![
                ("x".into(), "y".into()),
                ("y".into(), "x".into()),
                ("x".into(), "x".into())
            ]
        );
    }

    #[test]
    fn without_edge_keeps_vertices_and_maps_back() {
        let g = fib_r1();
        let (h, map) = g.without_edge(EdgeId(1));
        assert_eq!(h.n_vertices(), 2);
        assert_eq!(h.n_edges(), 2);
        assert_eq!(h.edge(EdgeId(0)).label, "aa");
        assert_eq!(h.edge(EdgeId(1)).label, "ba");
        assert_eq!(map.original_edge(EdgeId(1)), EdgeId(2));
        assert_eq!(map.original_vertex(VertexId(1)), VertexId(1));
    }

    #[test]
    fn induced_subgraph_filters_edges() {
        let g = fib_r1();
        let (h, map) = g.induced_subgraph(&[VertexId(0)]);
        assert_eq!(h.n_vertices(), 1);
        assert_eq!(h.n_edges(), 1);
        assert_eq!(h.edge(EdgeId(0)).label, "aa");
        assert_eq!(map.original_vertex(VertexId(0)), VertexId(0));
        assert_eq!(map.original_edge(EdgeId(0)), EdgeId(0));
    }

    #[test]
    fn edge_subgraph_collects_endpoints() {
        let g = fib_r1();
        let (h, map) = g.edge_subgraph(&[EdgeId(1), EdgeId(2)]);
        assert_eq!(h.n_vertices(), 2);
        assert_eq!(h.n_edges(), 2);
        assert_eq!(h.edge(EdgeId(0)).label, "ab");
        assert_eq!(map.original_edge(EdgeId(1)), EdgeId(2));
    }

    #[test]
    fn delete_fork_edge_to_loop() {
        // Removing ab from the Fibonacci order-1 graph leaves only the
        // loop at a reachable.
        let g = fib_r1();
        let (h, map) = g.delete_edge_reachable(EdgeId(1)).unwrap();
        assert_eq!(h.n_vertices(), 1);
        assert_eq!(h.n_edges(), 1);
        assert_eq!(h.vertex_label(VertexId(0)), "a");
        assert_eq!(h.edge(EdgeId(0)).label, "aa");
        assert_eq!(map.original_vertex(VertexId(0)), VertexId(0));
    }

    #[test]
    fn delete_loop_edge_to_two_cycle() {
        let g = fib_r1();
        let (h, _) = g.delete_edge_reachable(EdgeId(0)).unwrap();
        assert_eq!(h.n_vertices(), 2);
        assert_eq!(h.n_edges(), 2);
        assert!(is_cycle(&h));
    }

    #[test]
    fn delete_requires_a_fork() {
        let g = fib_r1();
        assert!(matches!(
            g.delete_edge_reachable(EdgeId(2)),
            Err(Error::NotAFork { edge: EdgeId(2) })
        ));
    }

    #[test]
    fn deletion_can_strand_vertices() {
        // b -> sink dangles once b's only incoming path is cut.
        let mut g = Digraph::new();
        let a = g.add_vertex("a");
        let b = g.add_vertex("b");
        let c = g.add_vertex("c");
        g.add_edge(a, a, "loop");
        let ab = g.add_edge(a, b, "cut");
        g.add_edge(b, c, "tail");
        let (h, _) = g.delete_edge_reachable(ab).unwrap();
        assert_eq!(h.n_vertices(), 1);
        assert_eq!(h.vertex_label(VertexId(0)), "a");
        assert_eq!(h.n_edges(), 1);
    }
}
