use crate::labeling::{Label, LabeledLattice};
use crate::perm_group::ChiefSeries;
use crate::subgroup_lattice::{NodeId, SubgroupLattice};

use super::el::descending_chains;

/// A chain `1 = H_k < ... < H_0 = G` with each `H_i` a complement to `N_i`,
/// stored ascending from `H_k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComplementChain {
    pub subgroups: Vec<NodeId>,
}

/// `HN = G` and `H ∩ N = 1`, tested on element sets.
fn is_complement(lattice: &SubgroupLattice, h: NodeId, n: NodeId) -> bool {
    let g = lattice.group();
    let (h, n) = (lattice.node(h), lattice.node(n));
    h.intersection(n).order() == 1 && g.product_set(h, n).len() == g.order()
}

/// All chains of complements to `series`, by descending search from `G`.
pub fn chains_of_complements(
    lattice: &SubgroupLattice,
    series: &ChiefSeries,
) -> Vec<ComplementChain> {
    let k = series.length();
    let mut out = Vec::new();
    // prefixes hold H_0, H_1, ..., H_i
    let mut stack = vec![vec![lattice.top()]];
    while let Some(prefix) = stack.pop() {
        let i = prefix.len();
        if i == k + 1 {
            let mut subgroups = prefix;
            subgroups.reverse();
            out.push(ComplementChain { subgroups });
            continue;
        }
        let parent = *prefix.last().expect("non-empty");
        for h in lattice.down_set(parent).iter().filter(|&h| h != parent) {
            if is_complement(lattice, h, series.term(i)) {
                let mut next = prefix.clone();
                next.push(h);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescendingComparison {
    pub complements: usize,
    pub descending: usize,
    pub equal: bool,
    /// Every chain of complements carries coarse labels `k-1, ..., 1, 0`.
    pub coarse_pattern: bool,
}

/// Compares the descending chains of `labeled` with the chains of
/// complements of its series, as sets of subgroup sequences.
pub fn check_descending_equals_complements(labeled: &LabeledLattice<'_>) -> DescendingComparison {
    let lattice = labeled.lattice();
    let series = labeled.series();
    let complements: Vec<Vec<NodeId>> = chains_of_complements(lattice, series)
        .into_iter()
        .map(|c| c.subgroups)
        .collect();
    let descending = descending_chains(labeled);
    let k = series.length();
    let coarse_pattern = complements.iter().all(|c| {
        let mut read = c.clone();
        if labeled.orientation() == crate::subgroup_lattice::Orientation::Dual {
            read.reverse();
        }
        if !read.windows(2).all(|w| labeled.label(w[0], w[1]).is_some()) {
            return false;
        }
        let coarse: Vec<usize> = labeled
            .chain_labels(&read)
            .iter()
            .map(|l: &Label| l.coarse)
            .collect();
        coarse == (0..k).rev().collect::<Vec<_>>()
    });
    DescendingComparison {
        complements: complements.len(),
        descending: descending.len(),
        equal: complements == descending,
        coarse_pattern,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThevenazReport {
    pub moebius: i64,
    pub length: usize,
    pub complement_chains: usize,
    pub descending_chains: usize,
    pub pass: bool,
}

/// `μ(0̂, 1̂) = (-1)^k · #(chains of complements)`, with μ from the Möbius
/// recursion and the count from the complement search; the descending
/// chain count of `labeled` must give the same signed value.
pub fn check_thevenaz(labeled: &LabeledLattice<'_>) -> ThevenazReport {
    let lattice = labeled.lattice();
    let series = labeled.series();
    let k = series.length();
    let complements = chains_of_complements(lattice, series).len();
    let descending = descending_chains(labeled).len();
    let sign: i64 = if k.is_multiple_of(2) { 1 } else { -1 };
    let moebius = lattice.moebius_top();
    ThevenazReport {
        moebius,
        length: k,
        complement_chains: complements,
        descending_chains: descending,
        pass: moebius == sign * complements as i64 && moebius == sign * descending as i64,
    }
}
