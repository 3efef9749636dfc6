use crate::labeling::LabeledLattice;
use crate::subgroup_lattice::{NodeId, SubgroupLattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiuReport {
    pub nodes: usize,
    /// Nodes where the three characterizations disagree.
    pub disagreements: Vec<NodeId>,
    /// Normal subgroups failing the left modular identity.
    pub normal_not_left_modular: Vec<NodeId>,
    pub pass: bool,
}

pub fn check_liu_equivalence(lattice: &SubgroupLattice) -> LiuReport {
    let mut disagreements = Vec::new();
    let mut normal_not_left_modular = Vec::new();
    for x in 0..lattice.len() {
        let v = lattice.left_modular_equivalents(x);
        if !v.agree() {
            disagreements.push(x);
        }
        if lattice.is_normal(x) && !v.identity {
            normal_not_left_modular.push(x);
        }
    }
    LiuReport {
        nodes: lattice.len(),
        pass: disagreements.is_empty() && normal_not_left_modular.is_empty(),
        disagreements,
        normal_not_left_modular,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub sections: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Per labelled cover `E ⋖ F` with coarse label `i`: `𝒩_i(E) = 𝒩_i(F)` and
/// `ρ_i(E) ⋖ ρ_i(F)` in that section. Per section: closed, modular, and its
/// chain maximal with every node left modular in the section.
pub fn check_section_invariants(labeled: &LabeledLattice<'_>) -> SectionReport {
    let lattice = labeled.lattice();
    let sv = labeled.series_view();
    let orientation = labeled.orientation();
    let mut failures = Vec::new();
    for ((e, f), rec) in labeled.edges() {
        let i = rec.label.coarse;
        let (se, sf) = (sv.section(i, e), sv.section(i, f));
        if se != sf {
            failures.push(format!("sections {i} of {e} and {f} differ"));
        }
        if !se.is_cover_in(orientation, sv.rho(i, e), sv.rho(i, f)) {
            failures.push(format!("projection of {e} -> {f} is not a section cover"));
        }
    }
    for sc in labeled.sections() {
        let s = &sc.section;
        if !s.is_closed(lattice) || !s.is_modular(lattice) {
            failures.push(format!(
                "section {:?} is not a modular sublattice",
                s.members()
            ));
        }
        let chain = &sc.chain.nodes;
        let ends = chain.first() == Some(&s.bottom_in(orientation))
            && s.upper_covers_in(orientation, *chain.last().expect("non-empty"))
                .is_empty();
        let saturated = chain
            .windows(2)
            .all(|w| s.is_cover_in(orientation, w[0], w[1]));
        if !ends || !saturated {
            failures.push(format!("chain {chain:?} is not maximal in its section"));
        }
        let members = s.members();
        for &x in chain {
            let left_modular = members.iter().all(|&y| {
                members.iter().filter(|&&z| lattice.lt(y, z)).all(|&z| {
                    lattice.meet(lattice.join(y, x), z) == lattice.join(y, lattice.meet(x, z))
                })
            });
            if !left_modular {
                failures.push(format!("chain node {x} is not left modular in its section"));
            }
        }
    }
    SectionReport {
        sections: labeled.sections().len(),
        pass: failures.is_empty(),
        failures,
    }
}
