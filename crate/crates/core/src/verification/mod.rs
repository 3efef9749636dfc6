//! Exhaustive checkers for labelled subgroup lattices.
//!
//! Every checker returns a report rather than an error; a failing check is
//! data, not an exceptional condition.

mod coarse;
mod complements;
mod el;
mod projection;
mod structure;

pub use coarse::{check_coarse_skeleton, CoarseReport};
pub use complements::{
    chains_of_complements, check_descending_equals_complements, check_thevenaz, ComplementChain,
    DescendingComparison, ThevenazReport,
};
pub use el::{
    all_intervals, check_el, checked_intervals, descending_chains, ELReport, IntervalRecord,
    FULL_SCAN_LIMIT, SAMPLE_SEED, SAMPLE_SIZE,
};
pub use projection::{check_projection_isomorphisms, check_segment, ProjectionReport};
pub use structure::{check_liu_equivalence, check_section_invariants, LiuReport, SectionReport};

#[cfg(test)]
mod tests;
