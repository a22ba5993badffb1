//! Graphviz rendering of the orbit poset.

use std::fmt::Write;

use fancert_core::fan::{orbit_poset, Fan};

/// One node per cone, labelled by its rays and the dimension of its orbit;
/// edges go from a cone to the cones it is a facet of. `label` names rays.
pub fn orbit_poset_dot(f: &Fan, label: impl Fn(usize) -> String) -> String {
    let poset = orbit_poset(f);
    let mut out = String::from("digraph orbits {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, c) in poset.cones.iter().enumerate() {
        let rays: Vec<String> = c.indices().iter().map(|&r| label(r)).collect();
        writeln!(
            out,
            "  c{i} [label=\"{{{}}}\\ndim O = {}\"];",
            rays.join(","),
            poset.orbit_dim(i)
        )
        .unwrap();
    }
    for (a, b) in &poset.covers {
        writeln!(out, "  c{a} -> c{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
