use std::collections::BTreeSet;

use crate::labeling::LabeledLattice;
use crate::subgroup_lattice::NodeId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoarseReport {
    pub intervals: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// On each interval, compares three sets of maximal chains: those with
/// weakly increasing coarse labels, the extensions of the skeleton chain,
/// and those whose coarse label sequence is lexicographically least.
/// Also checks that each skeleton segment carries only its own coarse
/// label and that no chain dips below the first skeleton index.
pub fn check_coarse_skeleton(
    labeled: &LabeledLattice<'_>,
    intervals: &[(NodeId, NodeId)],
) -> CoarseReport {
    let sv = labeled.series_view();
    let view = labeled.view();
    let mut failures = Vec::new();
    for &(w, z) in intervals {
        let interval = view.interval(w, z).expect("comparable");
        let skeleton = sv.skeleton_chain(&interval);
        let chains = view.maximal_chains(&interval);
        let coarse: Vec<Vec<usize>> = chains
            .iter()
            .map(|c| labeled.chain_labels(c).iter().map(|l| l.coarse).collect())
            .collect();

        let increasing: BTreeSet<usize> = (0..chains.len())
            .filter(|&p| coarse[p].windows(2).all(|x| x[0] <= x[1]))
            .collect();
        let extensions: BTreeSet<usize> = (0..chains.len())
            .filter(|&p| skeleton.nodes.iter().all(|c| chains[p].contains(c)))
            .collect();
        let least = coarse.iter().min().cloned().unwrap_or_default();
        let lex_first: BTreeSet<usize> =
            (0..chains.len()).filter(|&p| coarse[p] == least).collect();
        if increasing != extensions || extensions != lex_first {
            failures.push(format!(
                "[{w}, {z}]: increasing {increasing:?}, extensions {extensions:?}, lex-first {lex_first:?}"
            ));
        }

        if let Some(&first) = skeleton.indices.first() {
            if coarse.iter().flatten().any(|&i| i < first) {
                failures.push(format!("[{w}, {z}]: a label falls below i(0) = {first}"));
            }
        }

        for (i, a, b) in skeleton.segments() {
            let segment = view.interval(a, b).expect("comparable");
            for x in segment.members() {
                for &y in view.upper_covers(x) {
                    if segment.contains(y) && labeled.label(x, y).map(|l| l.coarse) != Some(i) {
                        failures.push(format!("[{w}, {z}]: cover {x} -> {y} in segment [{a}, {b}] is not labelled {i}"));
                    }
                }
            }
        }
    }
    CoarseReport {
        intervals: intervals.len(),
        pass: failures.is_empty(),
        failures,
    }
}
