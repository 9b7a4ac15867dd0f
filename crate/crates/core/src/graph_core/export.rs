//! Text exports: Graphviz DOT and a plain sorted edge list.

use std::fmt::Write;

use super::SimpleGraph;

/// One `u v` line per edge, 0-based, `u < v`, lexicographically sorted.
pub fn to_edge_list(g: &SimpleGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Undirected DOT with bare numeric node ids.
pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    to_dot_with(g, name, |_| String::new())
}

/// Undirected DOT. `attrs(v)` returns the attribute list body for node `v`
/// (e.g. `label="3"`); an empty string leaves the node unannotated.
pub fn to_dot_with<F>(g: &SimpleGraph, name: &str, attrs: F) -> String
where
    F: Fn(usize) -> String,
{
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for v in 0..g.order() {
        let a = attrs(v);
        if a.is_empty() {
            writeln!(out, "  {v};").unwrap();
        } else {
            writeln!(out, "  {v} [{a}];").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
