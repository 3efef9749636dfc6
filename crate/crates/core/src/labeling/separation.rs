use crate::error::{Error, Result};
use crate::perm_group::ChiefSeries;
use crate::subgroup_lattice::{
    Interval, LatticeView, NodeId, Orientation, SubgroupLattice, Sublattice,
};

/// The unique `i` such that `chain[i+1] / chain[i]` weakly separates the
/// cover `y ⋖ z`: `chain[i] ∧ z = chain[i] ∧ y` and
/// `chain[i+1] ∨ z = chain[i+1] ∨ y`.
///
/// `chain` must run from bottom to top through left modular elements;
/// otherwise no index, or several, may qualify and an error is returned.
pub fn separation_index(
    view: &LatticeView<'_>,
    chain: &[NodeId],
    y: NodeId,
    z: NodeId,
) -> Result<usize> {
    let hits: Vec<usize> = (0..chain.len().saturating_sub(1))
        .filter(|&i| {
            view.meet(chain[i], z) == view.meet(chain[i], y)
                && view.join(chain[i + 1], z) == view.join(chain[i + 1], y)
        })
        .collect();
    match hits.as_slice() {
        [i] => Ok(*i),
        [] => Err(Error::NoSeparation { lower: y, upper: z }),
        _ => Err(Error::MultipleSeparation {
            lower: y,
            upper: z,
            indices: hits,
        }),
    }
}

/// The chain `w = c_0 < c_1 < ... < c_m = z` every weakly increasing
/// maximal chain of `[w, z]` must pass through, with the indices `i(j)`
/// labelling its segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonChain {
    pub nodes: Vec<NodeId>,
    pub indices: Vec<usize>,
}

impl SkeletonChain {
    /// `(i(j), c_j, c_{j+1})` for each segment.
    pub fn segments(&self) -> impl Iterator<Item = (usize, NodeId, NodeId)> + '_ {
        self.indices
            .iter()
            .zip(self.nodes.windows(2))
            .map(|(&i, w)| (i, w[0], w[1]))
    }
}

/// A lattice view together with a chief series read from its bottom:
/// `x_0 = 0̂ < x_1 < ... < x_k = 1̂`.
#[derive(Clone, Debug)]
pub struct SeriesView<'a> {
    view: LatticeView<'a>,
    terms: Vec<NodeId>,
}

impl<'a> SeriesView<'a> {
    pub fn new(
        lattice: &'a SubgroupLattice,
        series: &ChiefSeries,
        orientation: Orientation,
    ) -> Self {
        SeriesView {
            view: lattice.view(orientation),
            terms: series.oriented_terms(orientation),
        }
    }

    pub fn view(&self) -> &LatticeView<'a> {
        &self.view
    }

    pub fn terms(&self) -> &[NodeId] {
        &self.terms
    }

    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn weak_separation_index(&self, y: NodeId, z: NodeId) -> Result<usize> {
        separation_index(&self.view, &self.terms, y, z)
    }

    pub fn skeleton_chain(&self, interval: &Interval) -> SkeletonChain {
        let (w, z) = (interval.lo(), interval.hi());
        let v = &self.view;
        let mut nodes = vec![w];
        let mut indices = Vec::new();
        let mut c = w;
        while c != z {
            // index 0 always qualifies and index k never does while c < z
            let i = (0..self.terms.len())
                .rev()
                .find(|&i| v.meet(v.join(c, self.terms[i]), z) == c)
                .expect("c ∨ 0̂ ∧ z = c");
            c = v.meet(v.join(c, self.terms[i + 1]), z);
            nodes.push(c);
            indices.push(i);
        }
        SkeletonChain { nodes, indices }
    }

    /// `ρ_i(H) = (x_i ∨ H) ∧ x_{i+1}`; in the primal view `N_i H ∩ N_{i+1}`.
    pub fn rho(&self, i: usize, h: NodeId) -> NodeId {
        let v = &self.view;
        v.meet(v.join(self.terms[i], h), self.terms[i + 1])
    }

    /// `φ_i(N) = (W ∨ N) ∧ Z`; in the primal view `WN ∩ Z`, which requires
    /// the product `WN` to be a subgroup.
    pub fn phi(&self, n: NodeId, w: NodeId, z: NodeId) -> Result<NodeId> {
        let v = &self.view;
        let joined = match v.orientation() {
            Orientation::Primal => v.lattice().product_subgroup(w, n)?,
            Orientation::Dual => v.join(w, n),
        };
        Ok(v.meet(joined, z))
    }

    /// `𝒩_i(H)`: the members of `[x_i, x_{i+1}]` normalized by `H`.
    pub fn section(&self, i: usize, h: NodeId) -> Sublattice {
        let (a, b) = (self.terms[i], self.terms[i + 1]);
        let lattice = self.view.lattice();
        let (lo, hi) = if lattice.leq(a, b) { (a, b) } else { (b, a) };
        lattice.normalized_between(lo, hi, h)
    }
}

/// Weak separation index of a cover of `L(G)` against the series.
pub fn weak_separation_index(
    lattice: &SubgroupLattice,
    series: &ChiefSeries,
    y: NodeId,
    z: NodeId,
) -> Result<usize> {
    SeriesView::new(lattice, series, Orientation::Primal).weak_separation_index(y, z)
}

pub fn skeleton_chain(
    lattice: &SubgroupLattice,
    series: &ChiefSeries,
    w: NodeId,
    z: NodeId,
) -> Result<SkeletonChain> {
    let interval = lattice.interval(w, z)?;
    Ok(SeriesView::new(lattice, series, Orientation::Primal).skeleton_chain(&interval))
}

pub fn rho(lattice: &SubgroupLattice, series: &ChiefSeries, i: usize, h: NodeId) -> NodeId {
    SeriesView::new(lattice, series, Orientation::Primal).rho(i, h)
}

pub fn phi(
    lattice: &SubgroupLattice,
    series: &ChiefSeries,
    n: NodeId,
    w: NodeId,
    z: NodeId,
) -> Result<NodeId> {
    SeriesView::new(lattice, series, Orientation::Primal).phi(n, w, z)
}
