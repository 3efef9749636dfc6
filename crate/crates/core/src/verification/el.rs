use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::labeling::{Label, LabeledLattice};
use crate::subgroup_lattice::{LatticeView, NodeId, Orientation};

/// Lattices up to this many nodes have every interval checked.
pub const FULL_SCAN_LIMIT: usize = 64;
pub const SAMPLE_SIZE: usize = 500;
pub const SAMPLE_SEED: u64 = 0x5EED;

/// Outcome of the EL conditions on one interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRecord {
    pub lo: NodeId,
    pub hi: NodeId,
    pub chains: usize,
    pub increasing: usize,
    /// Enumeration index of the lexicographically least chain.
    pub lex_first: Option<usize>,
    /// Enumeration index of the first weakly increasing chain.
    pub increasing_chain: Option<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct ELReport {
    pub orientation: Orientation,
    pub records: Vec<IntervalRecord>,
    pub pass: bool,
    pub elapsed: Duration,
}

impl ELReport {
    pub fn failures(&self) -> impl Iterator<Item = &IntervalRecord> {
        self.records.iter().filter(|r| !r.pass)
    }
}

/// Every pair `lo < hi` of the view, sorted.
pub fn all_intervals(view: &LatticeView<'_>) -> Vec<(NodeId, NodeId)> {
    let n = view.lattice().len();
    let mut out: Vec<(NodeId, NodeId)> = (0..n)
        .flat_map(|lo| {
            view.up_set(lo)
                .iter()
                .filter(move |&hi| hi != lo)
                .map(move |hi| (lo, hi))
        })
        .collect();
    out.sort_unstable();
    out
}

/// The intervals the checkers visit: all of them for small lattices;
/// otherwise every `[W, 1̂]` and `[0̂, Z]` plus a seeded random sample.
pub fn checked_intervals(view: &LatticeView<'_>) -> Vec<(NodeId, NodeId)> {
    let all = all_intervals(view);
    if view.lattice().len() <= FULL_SCAN_LIMIT {
        return all;
    }
    let (bottom, top) = (view.bottom(), view.top());
    let mut chosen: Vec<(NodeId, NodeId)> = all
        .iter()
        .copied()
        .filter(|&(lo, hi)| lo == bottom || hi == top)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    chosen.extend(all.choose_multiple(&mut rng, SAMPLE_SIZE).copied());
    chosen.sort_unstable();
    chosen.dedup();
    chosen
}

fn weakly_increasing(labels: &[Label]) -> bool {
    labels.windows(2).all(|w| w[0] <= w[1])
}

fn check_interval(labeled: &LabeledLattice<'_>, lo: NodeId, hi: NodeId) -> IntervalRecord {
    let view = labeled.view();
    let interval = view
        .interval(lo, hi)
        .expect("checked intervals are comparable");
    let mut chains = 0;
    let mut increasing = 0;
    let mut increasing_chain = None;
    let mut best: Option<(Vec<Label>, usize)> = None;
    let mut tied = false;
    view.for_each_maximal_chain(&interval, |chain| {
        let labels = labeled.chain_labels(chain);
        if weakly_increasing(&labels) {
            increasing += 1;
            increasing_chain.get_or_insert(chains);
        }
        match &best {
            Some((b, _)) if labels > *b => {}
            Some((b, _)) if labels == *b => tied = true,
            _ => {
                best = Some((labels, chains));
                tied = false;
            }
        }
        chains += 1;
    });
    let lex_first = best.map(|(_, idx)| idx);
    let pass = increasing == 1 && !tied && lex_first == increasing_chain;
    IntervalRecord {
        lo,
        hi,
        chains,
        increasing,
        lex_first,
        increasing_chain,
        pass,
    }
}

/// Checks that every checked interval has exactly one weakly increasing
/// maximal chain and that it is strictly lexicographically first.
pub fn check_el(labeled: &LabeledLattice<'_>) -> ELReport {
    let start = Instant::now();
    let intervals = checked_intervals(&labeled.view());
    let records: Vec<IntervalRecord> = intervals
        .par_iter()
        .map(|&(lo, hi)| check_interval(labeled, lo, hi))
        .collect();
    let pass = records.iter().all(|r| r.pass);
    ELReport {
        orientation: labeled.orientation(),
        records,
        pass,
        elapsed: start.elapsed(),
    }
}

/// Maximal chains of the whole lattice whose labels strictly decrease.
///
/// Chains are returned as ascending subgroup sequences `1 < ... < G`
/// regardless of orientation, sorted.
pub fn descending_chains(labeled: &LabeledLattice<'_>) -> Vec<Vec<NodeId>> {
    let view = labeled.view();
    let interval = view
        .interval(view.bottom(), view.top())
        .expect("bottom <= top");
    let mut out = Vec::new();
    view.for_each_maximal_chain(&interval, |chain| {
        let labels = labeled.chain_labels(chain);
        if labels.windows(2).all(|w| w[0] > w[1]) {
            let mut c = chain.to_vec();
            if labeled.orientation() == Orientation::Dual {
                c.reverse();
            }
            out.push(c);
        }
    });
    out.sort();
    out
}
