//! Graphviz output.

use std::fmt::Write;

use crate::graph::{Coloring, Graph};

/// Undirected DOT graph; vertices are labeled `id:color` when a coloring is
/// given.
pub fn export_dot(graph: &Graph, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..graph.vertex_count() {
        match coloring {
            Some(c) => writeln!(out, "  {v} [label=\"{v}:{}\"];", c.color(v)),
            None => writeln!(out, "  {v};"),
        }
        .expect("writing to a String");
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncolored_triangle() {
        let dot = export_dot(&Graph::cycle(3), None);
        assert_eq!(
            dot,
            "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn colored_edge() {
        let c = Coloring::new(vec![1, 2]).unwrap();
        let dot = export_dot(&Graph::path(2), Some(&c));
        assert!(dot.contains("0 [label=\"0:1\"]"));
        assert!(dot.contains("1 [label=\"1:2\"]"));
    }

    #[test]
    fn ring_of_eight_labels() {
        let c = crate::interval::color_ring(8, 1, 0).unwrap();
        let dot = export_dot(&Graph::cycle(8), Some(&c));
        let digits: String = (0..8)
            .map(|v| {
                let tag = format!("{v} [label=\"{v}:");
                let at = dot.find(&tag).unwrap() + tag.len();
                dot[at..].chars().next().unwrap()
            })
            .collect();
        assert_eq!(digits, "14342434");
    }
}
