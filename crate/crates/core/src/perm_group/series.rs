use crate::error::{Error, Result};
use crate::subgroup_lattice::{NodeId, Orientation, SubgroupLattice};

/// A chief series `1 = N_0 < N_1 < ... < N_k = G`, stored as lattice ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChiefSeries {
    terms: Vec<NodeId>,
}

/// All normal subgroups, in canonical order.
pub fn normal_subgroups(lattice: &SubgroupLattice) -> Vec<NodeId> {
    (0..lattice.len())
        .filter(|&h| lattice.is_normal(h))
        .collect()
}

/// The canonically least chief series: each step takes the least normal
/// subgroup strictly containing the current term.
pub fn chief_series(lattice: &SubgroupLattice) -> Result<ChiefSeries> {
    if !lattice.group().is_solvable() {
        return Err(Error::NotSolvable);
    }
    let normals = normal_subgroups(lattice);
    let mut terms = vec![lattice.bottom()];
    let mut current = lattice.bottom();
    while current != lattice.top() {
        // Ids are sorted by order, so the least strict normal overgroup is
        // automatically minimal among them.
        current = *normals
            .iter()
            .find(|&&n| lattice.lt(current, n))
            .expect("G is a normal overgroup of every proper normal subgroup");
        terms.push(current);
    }
    let series = ChiefSeries { terms };
    series.validate(lattice)?;
    Ok(series)
}

/// Every chief series of the group, in lexicographic order of id sequences.
pub fn all_chief_series(lattice: &SubgroupLattice) -> Result<Vec<ChiefSeries>> {
    if !lattice.group().is_solvable() {
        return Err(Error::NotSolvable);
    }
    let normals = normal_subgroups(lattice);
    let minimal_overgroups = |n: NodeId| -> Vec<NodeId> {
        normals
            .iter()
            .copied()
            .filter(|&m| lattice.lt(n, m))
            .filter(|&m| {
                !normals
                    .iter()
                    .any(|&x| lattice.lt(n, x) && lattice.lt(x, m))
            })
            .collect()
    };
    let mut out = Vec::new();
    let mut stack = vec![vec![lattice.bottom()]];
    while let Some(prefix) = stack.pop() {
        let last = *prefix.last().expect("non-empty");
        if last == lattice.top() {
            out.push(ChiefSeries { terms: prefix });
            continue;
        }
        for m in minimal_overgroups(last).into_iter().rev() {
            let mut next = prefix.clone();
            next.push(m);
            stack.push(next);
        }
    }
    Ok(out)
}

impl ChiefSeries {
    /// Validates a user-supplied series.
    pub fn from_terms(lattice: &SubgroupLattice, terms: Vec<NodeId>) -> Result<Self> {
        let series = ChiefSeries { terms };
        series.validate(lattice)?;
        Ok(series)
    }

    pub fn terms(&self) -> &[NodeId] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> NodeId {
        self.terms[i]
    }

    /// The number of chief factors `k`.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// The terms read from the bottom of the given orientation: the series
    /// itself, or `G = N_k > ... > N_0 = 1` for the dual lattice.
    pub fn oriented_terms(&self, orientation: Orientation) -> Vec<NodeId> {
        match orientation {
            Orientation::Primal => self.terms.clone(),
            Orientation::Dual => self.terms.iter().rev().copied().collect(),
        }
    }

    pub fn validate(&self, lattice: &SubgroupLattice) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSeries(msg));
        let group = lattice.group();
        match (self.terms.first(), self.terms.last()) {
            (Some(&first), Some(&last)) => {
                if first != lattice.bottom() {
                    return bad("first term is not the trivial subgroup".into());
                }
                if last != lattice.top() {
                    return bad("last term is not the whole group".into());
                }
            }
            _ => return bad("empty series".into()),
        }
        for &n in &self.terms {
            if n >= lattice.len() {
                return bad(format!("unknown subgroup id {n}"));
            }
            if !lattice.is_normal(n) {
                return bad(format!("subgroup {n} is not normal"));
            }
        }
        for pair in self.terms.windows(2) {
            let (lower, upper) = (pair[0], pair[1]);
            if !lattice.lt(lower, upper) {
                return bad(format!(
                    "terms {lower} and {upper} are not strictly increasing"
                ));
            }
            if let Some(x) = (0..lattice.len())
                .find(|&x| lattice.is_normal(x) && lattice.lt(lower, x) && lattice.lt(x, upper))
            {
                return bad(format!(
                    "normal subgroup {x} lies strictly between {lower} and {upper}"
                ));
            }
            let (lo, hi) = (lattice.node(lower), lattice.node(upper));
            for a in hi.members() {
                for b in hi.members() {
                    if !lo.contains(group.commutator(a, b)) {
                        return bad(format!("factor {upper}/{lower} is not abelian"));
                    }
                }
            }
        }
        Ok(())
    }
}
