//! Graphviz export of Hasse diagrams.

use std::fmt::Write;

use crate::closure::DmLattice;
use crate::poset::FinitePoset;

/// Cover edges only, bottom-to-top, nodes in carrier order.
pub fn export_dot(p: &FinitePoset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..p.len() {
        writeln!(out, "  n{x} [label=\"{}\"];", escape(p.name(x))).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn export_completion_dot(d: &DmLattice) -> String {
    export_dot(&d.to_poset())
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
