//! Graphviz DOT rendering, deterministic by construction: vertices and
//! edges appear in id order.

use super::Digraph;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(g: &Digraph, name: &str) -> String {
    let mut s = format!("digraph {name} {{\n");
    for v in g.vertices() {
        s.push_str(&format!("  v{} [label=\"{}\"];\n", v.0, escape(g.vertex_label(v))));
    }
    for e in g.edge_ids() {
        let ed = g.edge(e);
        s.push_str(&format!(
            "  v{} -> v{} [label=\"{}\"];\n",
            ed.src.0,
            ed.dst.0,
            escape(&ed.label)
        ));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::super::fib_r1;
    use super::*;

    #[test]
    fn golden_rendering() {
        assert_eq!(
            to_dot(&fib_r1(), "r1"),
            "digraph r1 {\n\
             \x20 v0 [label=\"a\"];\n\
             \x20 v1 [label=\"b\"];\n\
             \x20 v0 -> v0 [label=\"aa\"];\n\
             \x20 v0 -> v1 [label=\"ab\"];\n\
             \x20 v1 -> v0 [label=\"ba\"];\n\
             }\n"
        );
    }

    #[test]
    fn quotes_and_backslashes_are_escaped() {
        let mut g = Digraph::new();
        let v = g.add_vertex("a\"b\\c");
        g.add_edge(v, v, "x\"y");
        let dot = to_dot(&g, "g");
        assert!(dot.contains("label=\"a\\\"b\\\\c\""));
        assert!(dot.contains("label=\"x\\\"y\""));
    }
}
