use crate::bitset::BitSet;
use crate::error::{Error, Result};

use super::{NodeId, SubgroupLattice};

/// Which order a lattice is read in: inclusion, or reverse inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Primal,
    Dual,
}

/// A subgroup lattice read in a fixed orientation.
///
/// In the dual view `leq` is reverse inclusion, meet and join swap, the
/// bottom is the whole group and upper covers are maximal subgroups.
#[derive(Clone, Copy, Debug)]
pub struct LatticeView<'a> {
    lattice: &'a SubgroupLattice,
    orientation: Orientation,
}

impl<'a> LatticeView<'a> {
    pub fn new(lattice: &'a SubgroupLattice, orientation: Orientation) -> Self {
        LatticeView {
            lattice,
            orientation,
        }
    }

    pub fn lattice(&self) -> &'a SubgroupLattice {
        self.lattice
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    fn primal(&self) -> bool {
        self.orientation == Orientation::Primal
    }

    pub fn bottom(&self) -> NodeId {
        if self.primal() {
            self.lattice.bottom()
        } else {
            self.lattice.top()
        }
    }

    pub fn top(&self) -> NodeId {
        if self.primal() {
            self.lattice.top()
        } else {
            self.lattice.bottom()
        }
    }

    #[inline]
    pub fn leq(&self, a: NodeId, b: NodeId) -> bool {
        if self.primal() {
            self.lattice.leq(a, b)
        } else {
            self.lattice.leq(b, a)
        }
    }

    #[inline]
    pub fn lt(&self, a: NodeId, b: NodeId) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: NodeId, b: NodeId) -> NodeId {
        if self.primal() {
            self.lattice.meet(a, b)
        } else {
            self.lattice.join(a, b)
        }
    }

    #[inline]
    pub fn join(&self, a: NodeId, b: NodeId) -> NodeId {
        if self.primal() {
            self.lattice.join(a, b)
        } else {
            self.lattice.meet(a, b)
        }
    }

    pub fn upper_covers(&self, a: NodeId) -> &'a [NodeId] {
        if self.primal() {
            self.lattice.upper_covers(a)
        } else {
            self.lattice.lower_covers(a)
        }
    }

    pub fn lower_covers(&self, a: NodeId) -> &'a [NodeId] {
        if self.primal() {
            self.lattice.lower_covers(a)
        } else {
            self.lattice.upper_covers(a)
        }
    }

    pub fn is_cover(&self, y: NodeId, z: NodeId) -> bool {
        if self.primal() {
            self.lattice.is_cover(y, z)
        } else {
            self.lattice.is_cover(z, y)
        }
    }

    /// Cover relations `(y, z)` with `y` below `z` in this orientation.
    pub fn cover_edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut edges = self.lattice.cover_edges();
        if !self.primal() {
            for e in &mut edges {
                *e = (e.1, e.0);
            }
            edges.sort_unstable();
        }
        edges
    }

    /// Inclusive set of elements `>= a` in this orientation.
    pub fn up_set(&self, a: NodeId) -> &'a BitSet {
        if self.primal() {
            self.lattice.up_set(a)
        } else {
            self.lattice.down_set(a)
        }
    }

    /// Inclusive set of elements `<= a` in this orientation.
    pub fn down_set(&self, a: NodeId) -> &'a BitSet {
        if self.primal() {
            self.lattice.down_set(a)
        } else {
            self.lattice.up_set(a)
        }
    }

    pub fn interval(&self, lo: NodeId, hi: NodeId) -> Result<Interval> {
        if !self.leq(lo, hi) {
            return Err(Error::Incomparable {
                lower: lo,
                upper: hi,
            });
        }
        let members = self.up_set(lo).intersection(self.down_set(hi));
        Ok(Interval {
            orientation: self.orientation,
            lo,
            hi,
            members,
        })
    }

    /// All maximal chains of the interval as node sequences from `lo` to
    /// `hi`, in lexicographic order of the id sequences.
    pub fn maximal_chains(&self, interval: &Interval) -> Vec<Vec<NodeId>> {
        let mut out = Vec::new();
        self.for_each_maximal_chain(interval, |c| out.push(c.to_vec()));
        out
    }

    /// Depth-first walk over the maximal chains of `interval`, visiting
    /// them in lexicographic order of id sequences.
    pub fn for_each_maximal_chain<F: FnMut(&[NodeId])>(&self, interval: &Interval, mut visit: F) {
        let mut chain = vec![interval.lo];
        self.walk(interval, &mut chain, &mut visit);
    }

    fn walk<F: FnMut(&[NodeId])>(
        &self,
        interval: &Interval,
        chain: &mut Vec<NodeId>,
        visit: &mut F,
    ) {
        let last = *chain.last().expect("chain starts at lo");
        if last == interval.hi {
            visit(chain);
            return;
        }
        for &next in self.upper_covers(last) {
            if interval.members.contains(next) {
                chain.push(next);
                self.walk(interval, chain, visit);
                chain.pop();
            }
        }
    }
}

/// The closed interval `[lo, hi]` of a lattice view.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    orientation: Orientation,
    lo: NodeId,
    hi: NodeId,
    members: BitSet,
}

impl Interval {
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn lo(&self) -> NodeId {
        self.lo
    }

    pub fn hi(&self) -> NodeId {
        self.hi
    }

    pub fn member_set(&self) -> &BitSet {
        &self.members
    }

    pub fn members(&self) -> Vec<NodeId> {
        self.members.to_vec()
    }

    pub fn contains(&self, x: NodeId) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
