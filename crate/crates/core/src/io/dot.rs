//! Graphviz DOT export.

use std::fmt::Write;

use crate::graph::{Graph, VertexSet};

/// Undirected DOT text with vertices and edges in id order. Vertices in
/// `highlight` are drawn filled.
pub fn to_dot(g: &Graph, highlight: Option<&VertexSet>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let label = g.labels().map(|l| l[v].as_str());
        let mut attrs = Vec::new();
        if let Some(l) = label {
            attrs.push(format!("label=\"{}\"", l.replace('"', "\\\"")));
        }
        if highlight.is_some_and(|h| h.contains(v)) {
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=\"#f4a261\"".to_string());
        }
        if attrs.is_empty() {
            writeln!(out, "  {v};").unwrap();
        } else {
            writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
