use std::collections::BTreeMap;
use std::fmt::Write;

use crate::bundle::ExportBundle;

/// Hasse diagram of the labelled lattice, one rank per subgroup order.
pub fn to_dot(bundle: &ExportBundle) -> String {
    let mut out = String::new();
    out.push_str("digraph subgroup_lattice {\n");
    out.push_str("  rankdir=BT;\n  node [shape=box];\n");
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (id, s) in bundle.subgroups.iter().enumerate() {
        ranks.entry(s.order).or_default().push(id);
    }
    for ids in ranks.values() {
        out.push_str("  { rank=same;");
        for id in ids {
            let _ = write!(
                out,
                " n{id} [label=\"{}:{id}\"];",
                bundle.subgroups[*id].order
            );
        }
        out.push_str(" }\n");
    }
    for e in &bundle.edges {
        let [i, j] = e.label;
        let _ = write!(out, "  n{} -> n{} [label=\"({i},{j})\"", e.lower, e.upper);
        if let Some([a, b]) = e.dual_label {
            let _ = write!(out, ", taillabel=\"({a},{b})\"");
        }
        out.push_str("];\n");
    }
    out.push_str("}\n");
    out
}
