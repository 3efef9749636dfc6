use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

use super::Permutation;

pub const DEFAULT_MAX_ORDER: usize = 384;

/// Index of an element in its group's canonical element list.
pub type ElemId = usize;

/// A finite permutation group held as an explicit, canonically ordered
/// element list with multiplication and inverse tables.
///
/// Elements are sorted by their image arrays, so the identity is always
/// element 0. Products follow [`Permutation::then`]: `mul(a, b)` applies
/// `a` first.
#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, ElemId>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<ElemId>,
}

impl Group {
    /// Generates `<gens>` by breadth-first closure, failing once more than
    /// `max_order` elements have been found.
    pub fn generate(gens: &[Permutation], degree: usize, max_order: usize) -> Result<Group> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone(), ());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    if seen.len() >= max_order {
                        return Err(Error::OrderCapExceeded { cap: max_order });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_keys().collect();
        elements.sort();
        let index: HashMap<Permutation, ElemId> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(index[&a.then(b)] as u32);
            }
        }
        let inv = elements
            .iter()
            .map(|a| index[&a.inverse()] as u32)
            .collect();
        let mut generators: Vec<ElemId> = gens.iter().map(|g| index[g]).collect();
        generators.sort_unstable();
        generators.dedup();
        Ok(Group {
            degree,
            elements,
            index,
            mul,
            inv,
            generators,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: ElemId) -> &Permutation {
        &self.elements[id]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<ElemId> {
        self.index.get(p).copied()
    }

    /// Deduplicated indices of the generators the group was built from.
    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inv[a] as usize
    }

    /// `g x g^-1`
    pub fn conjugate(&self, g: ElemId, x: ElemId) -> ElemId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: ElemId) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_members(BitSet::from_indices(self.order(), [self.identity()]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(BitSet::full(self.order()))
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_closure<I: IntoIterator<Item = ElemId>>(&self, seed: I) -> Subgroup {
        let mut gens: Vec<ElemId> = seed.into_iter().filter(|&g| g != self.identity()).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut members = BitSet::new(self.order());
        members.insert(self.identity());
        let mut queue = vec![self.identity()];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    queue.push(y);
                }
            }
        }
        Subgroup::from_members(members)
    }

    /// The set `{hn : h in H, n in N}`; not necessarily a subgroup.
    pub fn product_set(&self, h: &Subgroup, n: &Subgroup) -> BitSet {
        let mut out = BitSet::new(self.order());
        for a in h.members() {
            for b in n.members() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    /// Whether `set` is closed under products and inverses.
    pub fn is_closed(&self, set: &BitSet) -> bool {
        set.contains(self.identity())
            && set.iter().all(|a| {
                set.contains(self.inv(a)) && set.iter().all(|b| set.contains(self.mul(a, b)))
            })
    }

    /// Whether `g H g^-1 = H` for every generator `g` of the group.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators
            .iter()
            .all(|&g| h.members().all(|x| h.contains(self.conjugate(g, x))))
    }

    /// The elements `g` with `g H g^-1 = H`.
    pub fn normalizer(&self, h: &Subgroup) -> BitSet {
        BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&g| h.members().all(|x| h.contains(self.conjugate(g, x)))),
        )
    }

    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut commutators = BitSet::new(self.order());
        for a in h.members() {
            for b in h.members() {
                commutators.insert(self.commutator(a, b));
            }
        }
        self.subgroup_closure(commutators.iter())
    }

    /// The derived series `G, G', G'', ...` up to its stabilization.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("non-empty");
            let next = self.derived_subgroup(last);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|h| h.order() == 1)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// A subgroup, as a membership bitset over its parent group's elements.
///
/// Subgroups order canonically: by order, then lexicographically on their
/// ascending member index lists.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    members: BitSet,
    order: usize,
}

impl Subgroup {
    /// Wraps a membership set; closure is the caller's responsibility.
    pub fn from_members(members: BitSet) -> Self {
        let order = members.len();
        Subgroup { members, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn member_set(&self) -> &BitSet {
        &self.members
    }

    pub fn members(&self) -> crate::bitset::Iter<'_> {
        self.members.iter()
    }

    #[inline]
    pub fn contains(&self, e: ElemId) -> bool {
        self.members.contains(e)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_members(self.members.intersection(&other.members))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp_members(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
