use super::{NodeId, SubgroupLattice};

/// Verdicts of three equivalent characterizations of a left modular
/// element `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeftModularity {
    /// `(y ∨ x) ∧ z = y ∨ (x ∧ z)` for all `y < z`.
    pub identity: bool,
    /// `x ∨ z != x ∨ y` or `x ∧ z != x ∧ y` for all `y < z`.
    pub separating: bool,
    /// exactly one of `x ∨ z = x ∨ y`, `x ∧ z = x ∧ y` for all covers `y ⋖ z`.
    pub cover_exclusive: bool,
}

impl LeftModularity {
    pub fn agree(&self) -> bool {
        self.identity == self.separating && self.separating == self.cover_exclusive
    }
}

impl SubgroupLattice {
    fn strict_pairs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.len()).flat_map(move |z| {
            self.down_set(z)
                .iter()
                .filter(move |&y| y != z)
                .map(move |y| (y, z))
        })
    }

    pub fn is_left_modular(&self, x: NodeId) -> bool {
        self.strict_pairs()
            .all(|(y, z)| self.meet(self.join(y, x), z) == self.join(y, self.meet(x, z)))
    }

    pub fn left_modular_equivalents(&self, x: NodeId) -> LeftModularity {
        let separating = self
            .strict_pairs()
            .all(|(y, z)| self.join(x, z) != self.join(x, y) || self.meet(x, z) != self.meet(x, y));
        let cover_exclusive = self.cover_edges().into_iter().all(|(y, z)| {
            (self.join(x, z) == self.join(x, y)) != (self.meet(x, z) == self.meet(x, y))
        });
        LeftModularity {
            identity: self.is_left_modular(x),
            separating,
            cover_exclusive,
        }
    }
}
