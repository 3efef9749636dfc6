//! Edge labels for `L(G)` built from a chief series.
//!
//! A cover `E ⋖ F` is labelled `(i, j)`: `i` is the chief factor
//! `N_{i+1}/N_i` weakly separating the cover, and `j` is the label of the
//! projected cover `ρ_i(E) ⋖ ρ_i(F)` in the modular section `𝒩_i(E)`,
//! taken against a fixed maximal chain of that section. Pairs compare
//! lexicographically. The dual labeling runs the same construction on the
//! reversed order with the reversed series.

mod modular;
mod separation;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::perm_group::ChiefSeries;
use crate::subgroup_lattice::{LatticeView, NodeId, Orientation, SubgroupLattice, Sublattice};

pub use modular::{canonical_modular_chain, liu_label, ModularChain};
pub use separation::{
    phi, rho, separation_index, skeleton_chain, weak_separation_index, SeriesView, SkeletonChain,
};

/// Edge label `(coarse, fine)`, ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub coarse: usize,
    pub fine: usize,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.coarse, self.fine)
    }
}

/// A section `𝒩_i(H)` together with the chain its labels are read from.
#[derive(Clone, Debug)]
pub struct SectionChain {
    pub index: usize,
    pub section: Sublattice,
    pub chain: ModularChain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeRecord {
    pub label: Label,
    /// Position in [`LabeledLattice::sections`].
    pub section: usize,
}

/// `L(G)` (or its dual) with a label on every cover relation.
#[derive(Clone, Debug)]
pub struct LabeledLattice<'a> {
    lattice: &'a SubgroupLattice,
    series: ChiefSeries,
    orientation: Orientation,
    // keyed by (lower, upper) in the labeling orientation
    edges: BTreeMap<(NodeId, NodeId), EdgeRecord>,
    sections: Vec<SectionChain>,
}

/// Labels `L(G)` bottom-up.
pub fn label_lattice<'a>(
    lattice: &'a SubgroupLattice,
    series: &ChiefSeries,
) -> Result<LabeledLattice<'a>> {
    LabeledLattice::build(lattice, series, Orientation::Primal)
}

/// Labels the dual of `L(G)`, reading covers from `G` downwards.
pub fn label_lattice_dual<'a>(
    lattice: &'a SubgroupLattice,
    series: &ChiefSeries,
) -> Result<LabeledLattice<'a>> {
    LabeledLattice::build(lattice, series, Orientation::Dual)
}

impl<'a> LabeledLattice<'a> {
    pub fn build(
        lattice: &'a SubgroupLattice,
        series: &ChiefSeries,
        orientation: Orientation,
    ) -> Result<Self> {
        if !lattice.group().is_solvable() {
            return Err(Error::NotSolvable);
        }
        series.validate(lattice)?;
        let sv = SeriesView::new(lattice, series, orientation);
        let view = *sv.view();
        let mut edges = BTreeMap::new();
        let mut sections: Vec<SectionChain> = Vec::new();
        let mut section_ids: HashMap<BitSet, usize> = HashMap::new();

        for (e, f) in view.cover_edges() {
            let i = sv.weak_separation_index(e, f)?;
            let section = sv.section(i, e);
            let sid = match section_ids.get(section.member_set()) {
                Some(&sid) => sid,
                None => {
                    let chain = canonical_modular_chain(&section, orientation);
                    section_ids.insert(section.member_set().clone(), sections.len());
                    sections.push(SectionChain {
                        index: i,
                        section,
                        chain,
                    });
                    sections.len() - 1
                }
            };
            let entry = &sections[sid];
            let (re, rf) = (sv.rho(i, e), sv.rho(i, f));
            if !entry.section.is_cover_in(orientation, re, rf) {
                return Err(Error::Inconsistent(format!(
                    "projection {re} -> {rf} of cover {e} -> {f} is not a cover of its section"
                )));
            }
            let j = liu_label(&view, &entry.chain, re, rf)?;
            edges.insert(
                (e, f),
                EdgeRecord {
                    label: Label { coarse: i, fine: j },
                    section: sid,
                },
            );
        }

        Ok(LabeledLattice {
            lattice,
            series: series.clone(),
            orientation,
            edges,
            sections,
        })
    }

    pub fn lattice(&self) -> &'a SubgroupLattice {
        self.lattice
    }

    pub fn series(&self) -> &ChiefSeries {
        &self.series
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn view(&self) -> LatticeView<'a> {
        self.lattice.view(self.orientation)
    }

    pub fn series_view(&self) -> SeriesView<'a> {
        SeriesView::new(self.lattice, &self.series, self.orientation)
    }

    /// Label of the cover `lower ⋖ upper`, both read in this labeling's
    /// orientation.
    pub fn label(&self, lower: NodeId, upper: NodeId) -> Option<Label> {
        self.edges.get(&(lower, upper)).map(|r| r.label)
    }

    pub fn edge(&self, lower: NodeId, upper: NodeId) -> Option<&EdgeRecord> {
        self.edges.get(&(lower, upper))
    }

    /// All labelled covers in ascending `(lower, upper)` order.
    pub fn edges(&self) -> impl Iterator<Item = ((NodeId, NodeId), &EdgeRecord)> + '_ {
        self.edges.iter().map(|(&k, v)| (k, v))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn sections(&self) -> &[SectionChain] {
        &self.sections
    }

    /// Labels read along a chain given in this labeling's orientation.
    ///
    /// Panics if consecutive nodes are not a labelled cover.
    pub fn chain_labels(&self, chain: &[NodeId]) -> Vec<Label> {
        chain
            .windows(2)
            .map(|w| {
                self.label(w[0], w[1])
                    .unwrap_or_else(|| panic!("{} -> {} is not a cover", w[0], w[1]))
            })
            .collect()
    }
}
