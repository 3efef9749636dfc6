use crate::error::Result;
use crate::subgroup_lattice::{LatticeView, NodeId, Orientation, Sublattice};

use super::separation::separation_index;

/// A maximal chain of a (modular) section, from its bottom to its top in
/// the labeling orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModularChain {
    pub nodes: Vec<NodeId>,
}

/// Greedy least chain: from the bottom, always step to the covering
/// member with the smallest id.
pub fn canonical_modular_chain(section: &Sublattice, orientation: Orientation) -> ModularChain {
    let mut nodes = vec![section.bottom_in(orientation)];
    loop {
        let last = *nodes.last().expect("non-empty");
        match section.upper_covers_in(orientation, last).iter().min() {
            Some(&next) => nodes.push(next),
            None => return ModularChain { nodes },
        }
    }
}

/// Label of the section cover `y ⋖ z`: its weak separation index against
/// `chain`, using the parent lattice's meet and join.
pub fn liu_label(
    view: &LatticeView<'_>,
    chain: &ModularChain,
    y: NodeId,
    z: NodeId,
) -> Result<usize> {
    separation_index(view, &chain.nodes, y, z)
}
