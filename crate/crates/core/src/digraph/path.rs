//! Walks through a digraph, stored as a start vertex plus consecutive
//! edges. Length is counted in vertices throughout: a single vertex has
//! length 1, and concatenation glues end to start, so
//! |p.concat(q)| = |p| + |q| - 1.

use super::{Digraph, EdgeId, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: VertexId,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn single_vertex(v: VertexId) -> Self {
        Path { start: v, edges: Vec::new() }
    }

    /// Validated constructor: each edge must leave the vertex the
    /// previous one entered, the first leaving `start`.
    pub fn new(g: &Digraph, start: VertexId, edges: Vec<EdgeId>) -> Result<Self> {
        if start.index() >= g.n_vertices() {
            return Err(Error::InvalidPath(format!("start {start:?} not in graph")));
        }
        let mut at = start;
        for (i, &e) in edges.iter().enumerate() {
            if e.index() >= g.n_edges() {
                return Err(Error::InvalidPath(format!("edge {e:?} not in graph")));
            }
            let ed = g.edge(e);
            if ed.src != at {
                return Err(Error::InvalidPath(format!(
                    "edge {i} starts at {:?}, walk is at {at:?}",
                    ed.src
                )));
            }
            at = ed.dst;
        }
        Ok(Path { start, edges })
    }

    /// Convenience for nonempty edge sequences.
    pub fn from_edges(g: &Digraph, edges: Vec<EdgeId>) -> Result<Self> {
        let first = *edges
            .first()
            .ok_or_else(|| Error::InvalidPath("empty edge sequence".into()))?;
        if first.index() >= g.n_edges() {
            return Err(Error::InvalidPath(format!("edge {first:?} not in graph")));
        }
        let start = g.edge(first).src;
        Path::new(g, start, edges)
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self, g: &Digraph) -> VertexId {
        self.edges.last().map_or(self.start, |&e| g.edge(e).dst)
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn len_vertices(&self) -> usize {
        self.edges.len() + 1
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    /// The visited vertices in order, one more than the edge count.
    pub fn vertices(&self, g: &Digraph) -> Vec<VertexId> {
        let mut vs = Vec::with_capacity(self.edges.len() + 1);
        vs.push(self.start);
        for &e in &self.edges {
            vs.push(g.edge(e).dst);
        }
        vs
    }

    pub fn extended(&self, g: &Digraph, e: EdgeId) -> Result<Self> {
        if g.edge(e).src != self.end(g) {
            return Err(Error::InvalidPath(format!(
                "edge {e:?} does not leave the walk end {:?}",
                self.end(g)
            )));
        }
        let mut edges = self.edges.clone();
        edges.push(e);
        Ok(Path { start: self.start, edges })
    }

    pub fn concat(&self, g: &Digraph, other: &Path) -> Result<Self> {
        if other.start != self.end(g) {
            return Err(Error::InvalidPath(format!(
                "cannot glue: first walk ends at {:?}, second starts at {:?}",
                self.end(g),
                other.start
            )));
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(Path { start: self.start, edges })
    }

    /// Human-readable rendering through labels: `a -[aa]-> a -[ab]-> b`.
    pub fn describe(&self, g: &Digraph) -> String {
        let mut s = g.vertex_label(self.start).to_string();
        for &e in &self.edges {
            let ed = g.edge(e);
            s.push_str(&format!(" -[{}]-> {}", ed.label, g.vertex_label(ed.dst)));
        }
        s
    }
}

/// Position of the first occurrence of `needle` as a contiguous sub-walk
/// of `haystack`, as an offset into the vertex sequence. An edgeless
/// needle matches wherever its vertex appears.
pub fn find_path_occurrence(
    g: &Digraph,
    haystack: &Path,
    needle: &Path,
) -> Option<usize> {
    if needle.n_edges() == 0 {
        return haystack.vertices(g).iter().position(|&v| v == needle.start);
    }
    let h = haystack.edges();
    let n = needle.edges();
    if n.len() > h.len() {
        return None;
    }
    (0..=h.len() - n.len()).find(|&i| &h[i..i + n.len()] == n)
}
