use std::fmt::Write as _;

use crate::lts::Lts;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering of the transition graph; the initial state is drawn
/// with a double circle.
pub fn render_dot(lts: &Lts) -> String {
    let mut out = String::from("digraph lts {\n  rankdir=LR;\n  node [shape=circle];\n");
    for (i, name) in lts.state_names().iter().enumerate() {
        let shape = if i == lts.initial() { ", shape=doublecircle" } else { "" };
        writeln!(out, "  s{i} [label=\"{}\"{shape}];", escape(name)).unwrap();
    }
    for t in lts.transitions() {
        writeln!(
            out,
            "  s{} -> s{} [label=\"{}\"];",
            t.source,
            t.target,
            escape(lts.label(t.label).as_str())
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
