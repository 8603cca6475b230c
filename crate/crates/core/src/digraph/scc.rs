//! Strong connectivity: Tarjan components, reachability, cycle shape.

use super::{Digraph, EdgeId, VertexId};
use crate::error::{Error, Result};

/// Strongly connected components, each sorted ascending, components
/// ordered by their smallest vertex. Iterative Tarjan, so deep graphs
/// cannot overflow the call stack.
pub fn sccs(g: &Digraph) -> Vec<Vec<VertexId>> {
    let n = g.n_vertices();
    let mut index = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut next_index = 0u32;
    let mut components: Vec<Vec<VertexId>> = Vec::new();

    // Explicit DFS frames: (vertex, position in its out-edge list).
    let mut frames: Vec<(u32, usize)> = Vec::new();
    for root in 0..n as u32 {
        if index[root as usize] != u32::MAX {
            continue;
        }
        frames.push((root, 0));
        index[root as usize] = next_index;
        low[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            let out = g.out_edges(VertexId(v));
            if frame.1 < out.len() {
                let w = g.edge(out[frame.1]).dst.0;
                frame.1 += 1;
                if index[w as usize] == u32::MAX {
                    index[w as usize] = next_index;
                    low[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    frames.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
            } else {
                frames.pop();
                if let Some(parent) = frames.last() {
                    let p = parent.0;
                    low[p as usize] = low[p as usize].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        comp.push(VertexId(w));
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
            }
        }
    }
    components.sort_unstable_by_key(|c| c[0]);
    components
}

/// Whether every vertex reaches every other. A single vertex counts,
/// with or without a loop; the empty graph is an error.
pub fn strongly_connected(g: &Digraph) -> Result<bool> {
    if g.n_vertices() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(sccs(g).len() == 1)
}

/// A single directed cycle: strongly connected with every out-degree
/// and in-degree exactly 1. A loop on one vertex counts.
pub fn is_cycle(g: &Digraph) -> bool {
    g.n_vertices() > 0
        && g.vertices().all(|v| g.out_degree(v) == 1 && g.in_degree(v) == 1)
        && sccs(g).len() == 1
}

/// Vertices reachable from `start` (including it), ascending.
pub fn reachable_from(g: &Digraph, start: VertexId) -> Vec<VertexId> {
    bfs(g, start, None)
}

/// Reachability with one edge treated as absent.
pub(crate) fn reachable_avoiding(
    g: &Digraph,
    start: VertexId,
    skip: EdgeId,
) -> Vec<VertexId> {
    bfs(g, start, Some(skip))
}

fn bfs(g: &Digraph, start: VertexId, skip: Option<EdgeId>) -> Vec<VertexId> {
    let mut seen = vec![false; g.n_vertices()];
    seen[start.index()] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &e in g.out_edges(v) {
            if skip == Some(e) {
                continue;
            }
            let w = g.edge(e).dst;
            if !seen[w.index()] {
                seen[w.index()] = true;
                queue.push_back(w);
            }
        }
    }
    g.vertices().filter(|v| seen[v.index()]).collect()
}

#[cfg(test)]
mod tests {
    use super::super::fib_r1;
    use super::*;

    fn cycle(n: usize) -> Digraph {
        let mut g = Digraph::new();
        let vs: Vec<VertexId> = (0..n).map(|i| g.add_vertex(format!("v{i}"))).collect();
        for i in 0..n {
            g.add_edge(vs[i], vs[(i + 1) % n], format!("e{i}"));
        }
        g
    }

    #[test]
    fn fib_r1_is_strongly_connected_but_not_a_cycle() {
        let g = fib_r1();
        assert!(strongly_connected(&g).unwrap());
        assert!(!is_cycle(&g));
    }

    #[test]
    fn cycles_of_every_small_size() {
        for n in 1..=6 {
            let g = cycle(n);
            assert!(is_cycle(&g), "n={n}");
            assert!(strongly_connected(&g).unwrap());
            assert_eq!(sccs(&g).len(), 1);
        }
    }

    #[test]
    fn chord_breaks_cycle_shape_but_not_connectivity() {
        let mut g = cycle(3);
        g.add_edge(VertexId(0), VertexId(2), "chord");
        assert!(strongly_connected(&g).unwrap());
        assert!(!is_cycle(&g));
    }

    #[test]
    fn two_disjoint_cycles_split_into_components() {
        let mut g = Digraph::new();
        let a = g.add_vertex("a");
        let b = g.add_vertex("b");
        let c = g.add_vertex("c");
        let d = g.add_vertex("d");
        g.add_edge(a, b, "");
        g.add_edge(b, a, "");
        g.add_edge(c, d, "");
        g.add_edge(d, c, "");
        assert_eq!(sccs(&g), vec![vec![a, b], vec![c, d]]);
        assert!(!strongly_connected(&g).unwrap());
        assert!(!is_cycle(&g));
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert!(matches!(strongly_connected(&Digraph::new()), Err(Error::EmptyGraph)));
        assert!(!is_cycle(&Digraph::new()));
    }

    #[test]
    fn isolated_vertex_is_trivially_strongly_connected() {
        let mut g = Digraph::new();
        g.add_vertex("v");
        assert!(strongly_connected(&g).unwrap());
        assert!(!is_cycle(&g));
    }

    #[test]
    fn chain_produces_singleton_components() {
        let g = Digraph::from_edge_list(&[("a", "b"), ("b", "c")]);
        let comps = sccs(&g);
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn reachable_respects_direction() {
        let g = Digraph::from_edge_list(&[("a", "b"), ("b", "c"), ("d", "a")]);
        assert_eq!(
            reachable_from(&g, VertexId(0)),
            vec![VertexId(0), VertexId(1), VertexId(2)]
        );
        assert_eq!(reachable_from(&g, VertexId(2)), vec![VertexId(2)]);
        assert_eq!(reachable_from(&g, VertexId(3)).len(), 4);
    }

    #[test]
    fn tarjan_matches_pairwise_reachability_oracle() {
        // Pseudorandom graphs, components checked against the definition:
        // u ~ v iff each reaches the other.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..60 {
            let n = 1 + (next() % 8) as usize;
            let m = (next() % 14) as usize;
            let mut g = Digraph::new();
            let vs: Vec<VertexId> =
                (0..n).map(|i| g.add_vertex(format!("v{i}"))).collect();
            for j in 0..m {
                let s = vs[(next() % n as u64) as usize];
                let d = vs[(next() % n as u64) as usize];
                g.add_edge(s, d, format!("e{j}"));
            }
            let reach: Vec<Vec<bool>> = (0..n)
                .map(|i| {
                    let r = reachable_from(&g, VertexId(i as u32));
                    let mut mask = vec![false; n];
                    for v in r {
                        mask[v.index()] = true;
                    }
                    mask
                })
                .collect();
            let mut expected: Vec<Vec<VertexId>> = Vec::new();
            let mut assigned = vec![false; n];
            for i in 0..n {
                if assigned[i] {
                    continue;
                }
                let comp: Vec<VertexId> = (0..n)
                    .filter(|&j| reach[i][j] && reach[j][i])
                    .map(|j| VertexId(j as u32))
                    .collect();
                for v in &comp {
                    assigned[v.index()] = true;
                }
                expected.push(comp);
            }
            expected.sort_unstable_by_key(|c| c[0]);
            assert_eq!(sccs(&g), expected, "trial {trial}");
        }
    }
}
