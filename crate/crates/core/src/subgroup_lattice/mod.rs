//! The lattice of all subgroups of a group: enumeration, Hasse diagram,
//! meet/join tables and generic lattice queries.

mod modularity;
mod sublattice;
mod view;

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::perm_group::{ElemId, Group, Subgroup};

pub use modularity::LeftModularity;
pub use sublattice::Sublattice;
pub use view::{Interval, LatticeView, Orientation};

pub const DEFAULT_MAX_SUBGROUPS: usize = 4096;

/// Position of a subgroup in the canonically ordered node list.
pub type NodeId = usize;

/// All subgroups of a group ordered by inclusion.
///
/// Nodes are sorted canonically (order, then member lists), which makes
/// the id order a linear extension of inclusion: the trivial subgroup is
/// node 0 and the whole group is the last node.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group: Arc<Group>,
    nodes: Vec<Subgroup>,
    index: HashMap<BitSet, NodeId>,
    // inclusive up-sets and down-sets over node ids
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    upper_covers: Vec<Vec<NodeId>>,
    lower_covers: Vec<Vec<NodeId>>,
    meet: Vec<u32>,
    join: Vec<u32>,
    normalizers: Vec<BitSet>,
    normal: Vec<bool>,
    moebius: Vec<i64>,
}

impl SubgroupLattice {
    /// Enumerates every subgroup of `group`.
    ///
    /// Starts from the cyclic subgroups and repeatedly joins each found
    /// subgroup with each cyclic subgroup it does not contain. Every subgroup
    /// is the join of its cyclic subgroups, so this reaches all of them.
    pub fn enumerate(group: Arc<Group>, max_subgroups: usize) -> Result<Self> {
        let g = group.as_ref();
        let mut cyclic: Vec<(ElemId, Subgroup)> = Vec::new();
        let mut seen_cyclic: HashMap<BitSet, ()> = HashMap::new();
        for x in 0..g.order() {
            let c = g.subgroup_closure([x]);
            if seen_cyclic.insert(c.member_set().clone(), ()).is_none() {
                cyclic.push((x, c));
            }
        }

        let mut found: HashMap<BitSet, Vec<ElemId>> = HashMap::new();
        let mut queue: VecDeque<BitSet> = VecDeque::new();
        for (x, c) in &cyclic {
            let gens = if *x == g.identity() { vec![] } else { vec![*x] };
            if found.len() >= max_subgroups {
                return Err(Error::SubgroupCapExceeded { cap: max_subgroups });
            }
            found.insert(c.member_set().clone(), gens);
            queue.push_back(c.member_set().clone());
        }
        while let Some(members) = queue.pop_front() {
            let gens = found[&members].clone();
            for (x, _) in &cyclic {
                if members.contains(*x) {
                    continue;
                }
                let joined = g.subgroup_closure(gens.iter().copied().chain([*x]));
                if found.contains_key(joined.member_set()) {
                    continue;
                }
                if found.len() >= max_subgroups {
                    return Err(Error::SubgroupCapExceeded { cap: max_subgroups });
                }
                let mut new_gens = gens.clone();
                new_gens.push(*x);
                queue.push_back(joined.member_set().clone());
                found.insert(joined.member_set().clone(), new_gens);
            }
        }

        let mut nodes: Vec<Subgroup> = found.into_keys().map(Subgroup::from_members).collect();
        nodes.sort();
        Ok(Self::from_nodes(group, nodes))
    }

    fn from_nodes(group: Arc<Group>, nodes: Vec<Subgroup>) -> Self {
        let n = nodes.len();
        let index: HashMap<BitSet, NodeId> = nodes
            .iter()
            .enumerate()
            .map(|(i, h)| (h.member_set().clone(), i))
            .collect();

        let mut up = vec![BitSet::new(n); n];
        let mut down = vec![BitSet::new(n); n];
        for a in 0..n {
            for b in a..n {
                if nodes[a].is_subgroup_of(&nodes[b]) {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }

        // y is covered by z iff nothing but y and z lies in [y, z].
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for z in 0..n {
            for y in down[z].iter().filter(|&y| y != z) {
                if up[y].intersection(&down[z]).len() == 2 {
                    upper_covers[y].push(z);
                    lower_covers[z].push(y);
                }
            }
        }

        // Ids are a linear extension by order, so the least upper bound is
        // the first common upper bound and the greatest lower bound the last
        // common lower bound.
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let m = down[a]
                    .intersection(&down[b])
                    .last()
                    .expect("bottom is a lower bound");
                let j = up[a]
                    .intersection(&up[b])
                    .first()
                    .expect("top is an upper bound");
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
            }
        }

        let normalizers: Vec<BitSet> = nodes.iter().map(|h| group.normalizer(h)).collect();
        let normal = nodes.iter().map(|h| group.is_normal(h)).collect();

        let mut moebius = vec![0i64; n];
        if n > 0 {
            moebius[0] = 1;
            for x in 1..n {
                moebius[x] = -down[x]
                    .iter()
                    .filter(|&y| y != x)
                    .map(|y| moebius[y])
                    .sum::<i64>();
            }
        }

        SubgroupLattice {
            group,
            nodes,
            index,
            up,
            down,
            upper_covers,
            lower_covers,
            meet,
            join,
            normalizers,
            normal,
            moebius,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Subgroup {
        &self.nodes[id]
    }

    pub fn id_of(&self, members: &BitSet) -> Option<NodeId> {
        self.index.get(members).copied()
    }

    pub fn bottom(&self) -> NodeId {
        0
    }

    pub fn top(&self) -> NodeId {
        self.nodes.len() - 1
    }

    #[inline]
    pub fn leq(&self, a: NodeId, b: NodeId) -> bool {
        self.down[b].contains(a)
    }

    #[inline]
    pub fn lt(&self, a: NodeId, b: NodeId) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: NodeId, b: NodeId) -> NodeId {
        self.meet[a * self.len() + b] as usize
    }

    #[inline]
    pub fn join(&self, a: NodeId, b: NodeId) -> NodeId {
        self.join[a * self.len() + b] as usize
    }

    /// Inclusive set of subgroups containing `a`.
    pub fn up_set(&self, a: NodeId) -> &BitSet {
        &self.up[a]
    }

    /// Inclusive set of subgroups contained in `a`.
    pub fn down_set(&self, a: NodeId) -> &BitSet {
        &self.down[a]
    }

    pub fn upper_covers(&self, a: NodeId) -> &[NodeId] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: NodeId) -> &[NodeId] {
        &self.lower_covers[a]
    }

    pub fn is_cover(&self, y: NodeId, z: NodeId) -> bool {
        self.upper_covers[y].binary_search(&z).is_ok()
    }

    /// All cover relations `(y, z)`, sorted.
    pub fn cover_edges(&self) -> Vec<(NodeId, NodeId)> {
        (0..self.len())
            .flat_map(|y| self.upper_covers[y].iter().map(move |&z| (y, z)))
            .collect()
    }

    pub fn is_normal(&self, h: NodeId) -> bool {
        self.normal[h]
    }

    /// Whether every element of `h` normalizes `x`.
    pub fn is_normalized_by(&self, x: NodeId, h: NodeId) -> bool {
        self.nodes[h].member_set().is_subset(&self.normalizers[x])
    }

    /// `μ(0̂, x)` for every node.
    pub fn moebius(&self) -> &[i64] {
        &self.moebius
    }

    /// `μ(0̂, 1̂)`.
    pub fn moebius_top(&self) -> i64 {
        self.moebius[self.top()]
    }

    pub fn view(&self, orientation: Orientation) -> LatticeView<'_> {
        LatticeView::new(self, orientation)
    }

    pub fn interval(&self, lo: NodeId, hi: NodeId) -> Result<Interval> {
        self.view(Orientation::Primal).interval(lo, hi)
    }

    pub fn maximal_chains(&self, interval: &Interval) -> Vec<Vec<NodeId>> {
        self.view(interval.orientation()).maximal_chains(interval)
    }

    /// The set `AB` as an element set, plus the id of `<A, B>`.
    pub fn product(&self, a: NodeId, b: NodeId) -> (BitSet, NodeId) {
        (
            self.group.product_set(&self.nodes[a], &self.nodes[b]),
            self.join(a, b),
        )
    }

    /// The id of `AB` when that product set is a subgroup.
    pub fn product_subgroup(&self, a: NodeId, b: NodeId) -> Result<NodeId> {
        let (set, j) = self.product(a, b);
        if set.len() == self.nodes[j].order() {
            Ok(j)
        } else {
            Err(Error::ProductNotSubgroup { left: a, right: b })
        }
    }

    /// `𝒩_i(H)`: subgroups between `N_i` and `N_{i+1}` normalized by `H`.
    pub fn normalized_section(
        &self,
        i: usize,
        h: NodeId,
        series: &crate::perm_group::ChiefSeries,
    ) -> Sublattice {
        self.normalized_between(series.term(i), series.term(i + 1), h)
    }

    /// Subgroups `X` with `lo <= X <= hi` normalized by `h`, as a
    /// sublattice with its own cover relations.
    pub fn normalized_between(&self, lo: NodeId, hi: NodeId, h: NodeId) -> Sublattice {
        let mut members = self.up[lo].intersection(&self.down[hi]);
        for x in members.to_vec() {
            if !self.is_normalized_by(x, h) {
                members.remove(x);
            }
        }
        Sublattice::new(self, members)
    }
}
