use crate::bitset::BitSet;

use super::{LatticeView, NodeId, Orientation, SubgroupLattice};

/// A subset of `L(G)` closed under meet and join, with cover relations of
/// the restricted order.
///
/// Restricted covers need not be covers of `L(G)`: in `A_4`, the section
/// `{1, V_4}` has `1 < V_4` as a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sublattice {
    members: Vec<NodeId>,
    member_set: BitSet,
    upper: Vec<Vec<NodeId>>,
    lower: Vec<Vec<NodeId>>,
}

impl Sublattice {
    pub fn new(lattice: &SubgroupLattice, member_set: BitSet) -> Self {
        let members = member_set.to_vec();
        let mut upper = vec![Vec::new(); members.len()];
        let mut lower = vec![Vec::new(); members.len()];
        for (pz, &z) in members.iter().enumerate() {
            for (py, &y) in members.iter().enumerate().take(pz) {
                if !lattice.lt(y, z) {
                    continue;
                }
                let between = members[py + 1..pz]
                    .iter()
                    .any(|&x| lattice.lt(y, x) && lattice.lt(x, z));
                if !between {
                    upper[py].push(z);
                    lower[pz].push(y);
                }
            }
        }
        Sublattice {
            members,
            member_set,
            upper,
            lower,
        }
    }

    pub fn members(&self) -> &[NodeId] {
        &self.members
    }

    pub fn member_set(&self) -> &BitSet {
        &self.member_set
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: NodeId) -> bool {
        self.member_set.contains(x)
    }

    fn position(&self, x: NodeId) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    /// Least member under inclusion.
    pub fn bottom(&self) -> NodeId {
        self.members[0]
    }

    /// Greatest member under inclusion.
    pub fn top(&self) -> NodeId {
        *self.members.last().expect("non-empty sublattice")
    }

    pub fn bottom_in(&self, orientation: Orientation) -> NodeId {
        match orientation {
            Orientation::Primal => self.bottom(),
            Orientation::Dual => self.top(),
        }
    }

    pub fn upper_covers_in(&self, orientation: Orientation, x: NodeId) -> &[NodeId] {
        let Some(p) = self.position(x) else {
            return &[];
        };
        match orientation {
            Orientation::Primal => &self.upper[p],
            Orientation::Dual => &self.lower[p],
        }
    }

    /// Whether `y < z` is a cover of the restricted inclusion order.
    pub fn is_cover(&self, y: NodeId, z: NodeId) -> bool {
        self.position(y)
            .is_some_and(|p| self.upper[p].binary_search(&z).is_ok())
    }

    pub fn is_cover_in(&self, orientation: Orientation, y: NodeId, z: NodeId) -> bool {
        match orientation {
            Orientation::Primal => self.is_cover(y, z),
            Orientation::Dual => self.is_cover(z, y),
        }
    }

    pub fn cover_edges(&self) -> Vec<(NodeId, NodeId)> {
        self.members
            .iter()
            .zip(&self.upper)
            .flat_map(|(&y, ups)| ups.iter().map(move |&z| (y, z)))
            .collect()
    }

    /// Members of `[lo, hi]` in this sublattice, for the given view.
    pub fn interval_members(&self, view: &LatticeView<'_>, lo: NodeId, hi: NodeId) -> BitSet {
        let mut out = self.member_set.clone();
        out.intersect_with(view.up_set(lo));
        out.intersect_with(view.down_set(hi));
        out
    }

    pub fn is_closed(&self, lattice: &SubgroupLattice) -> bool {
        self.members.iter().all(|&a| {
            self.members
                .iter()
                .all(|&b| self.contains(lattice.meet(a, b)) && self.contains(lattice.join(a, b)))
        })
    }

    /// Exhaustive check of `x ∨ (y ∧ z) = (x ∨ y) ∧ z` for `x <= z`.
    pub fn is_modular(&self, lattice: &SubgroupLattice) -> bool {
        let m = &self.members;
        m.iter().all(|&x| {
            m.iter().filter(|&&z| lattice.leq(x, z)).all(|&z| {
                m.iter().all(|&y| {
                    lattice.join(x, lattice.meet(y, z)) == lattice.meet(lattice.join(x, y), z)
                })
            })
        })
    }
}
