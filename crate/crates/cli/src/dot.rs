//! DOT export of Hasse diagrams.
//!
//! Emits the covering relation only (transitive reduction of the
//! derived order), bottom-to-top, with deterministic node and edge
//! order so identical inputs produce byte-identical files.

use std::fmt::Write as _;

use cubic_core::QuotientLattice;

use crate::io::Loaded;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of a loaded structure.
pub fn structure_dot(loaded: &Loaded) -> Result<String, String> {
    let order = loaded.structure.order().map_err(|e| e.to_string())?;
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (i, label) in loaded.labels.iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{}\"];", escape(label));
    }
    for (lower, upper) in order.covers() {
        let _ = writeln!(out, "  {lower} -> {upper};");
    }
    out.push_str("}\n");
    Ok(out)
}

/// Hasse diagram of a quotient's class order (join-derived).
pub fn quotient_dot(q: &QuotientLattice) -> String {
    let k = q.len();
    let lt = |i: usize, j: usize| i != j && q.leq(i, j);
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (i, class) in q.classes.iter().enumerate() {
        let members: Vec<String> = class.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "  {i} [label=\"{{{}}}\"];", members.join(","));
    }
    for lower in 0..k {
        for upper in 0..k {
            if lt(lower, upper) && !(0..k).any(|z| lt(lower, z) && lt(z, upper)) {
                let _ = writeln!(out, "  {lower} -> {upper};");
            }
        }
    }
    out.push_str("}\n");
    out
}
