//! Permutation arithmetic, table-based permutation groups, normality and
//! solvability, and chief series.

mod group;
mod permutation;
mod series;

pub use group::{ElemId, Group, Subgroup, DEFAULT_MAX_ORDER};
pub use permutation::Permutation;
pub use series::{all_chief_series, chief_series, normal_subgroups, ChiefSeries};
