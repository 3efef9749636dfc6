use std::collections::BTreeSet;

use crate::labeling::{LabeledLattice, SeriesView};
use crate::subgroup_lattice::NodeId;

use super::el::checked_intervals;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionReport {
    pub segments: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Checks that `ρ_i` maps the segment `[a, b]` (all of whose covers are
/// weakly separated by factor `i`) isomorphically onto `[ρ_i(a), ρ_i(b)]`
/// inside `𝒩_i(a)`, with `φ_i` as two-sided inverse.
pub fn check_segment(sv: &SeriesView<'_>, i: usize, a: NodeId, b: NodeId) -> Result<(), String> {
    let view = sv.view();
    let segment = view
        .interval(a, b)
        .map_err(|e| format!("segment [{a}, {b}]: {e}"))?
        .members();
    let section = sv.section(i, a);
    for &m in &segment {
        if sv.section(i, m) != section {
            return Err(format!("section {i} of {m} differs from that of {a}"));
        }
    }
    let (ra, rb) = (sv.rho(i, a), sv.rho(i, b));
    if !section.contains(ra) || !section.contains(rb) || !view.leq(ra, rb) {
        return Err(format!(
            "endpoints of [{a}, {b}] project outside section {i}"
        ));
    }
    let target: BTreeSet<NodeId> = section.interval_members(view, ra, rb).iter().collect();
    let images: Vec<NodeId> = segment.iter().map(|&m| sv.rho(i, m)).collect();
    let image_set: BTreeSet<NodeId> = images.iter().copied().collect();
    if image_set.len() != segment.len() {
        return Err(format!("ρ_{i} is not injective on [{a}, {b}]"));
    }
    if image_set != target {
        return Err(format!(
            "ρ_{i}([{a}, {b}]) is not [{ra}, {rb}] in the section"
        ));
    }
    for (p, &x) in segment.iter().enumerate() {
        for (q, &y) in segment.iter().enumerate() {
            if view.leq(x, y) != view.leq(images[p], images[q]) {
                return Err(format!("ρ_{i} does not reflect order on {x}, {y}"));
            }
        }
        match sv.phi(images[p], a, b) {
            Ok(back) if back == x => {}
            Ok(back) => return Err(format!("φ_{i}(ρ_{i}({x})) = {back}")),
            Err(e) => return Err(format!("φ_{i}(ρ_{i}({x})): {e}")),
        }
    }
    for &n in &target {
        match sv.phi(n, a, b) {
            Ok(h) if segment.contains(&h) && sv.rho(i, h) == n => {}
            Ok(h) => return Err(format!("ρ_{i}(φ_{i}({n})) = {} via {h}", sv.rho(i, h))),
            Err(e) => return Err(format!("φ_{i}({n}): {e}")),
        }
    }
    Ok(())
}

/// Runs [`check_segment`] on every skeleton segment of every checked
/// interval, and on every labelled cover.
pub fn check_projection_isomorphisms(labeled: &LabeledLattice<'_>) -> ProjectionReport {
    let sv = labeled.series_view();
    let view = labeled.view();
    let mut segments: BTreeSet<(usize, NodeId, NodeId)> = BTreeSet::new();
    for (lo, hi) in checked_intervals(&view) {
        let interval = view.interval(lo, hi).expect("comparable");
        segments.extend(sv.skeleton_chain(&interval).segments());
    }
    for ((e, f), rec) in labeled.edges() {
        segments.insert((rec.label.coarse, e, f));
    }
    let failures: Vec<String> = segments
        .iter()
        .filter_map(|&(i, a, b)| check_segment(&sv, i, a, b).err())
        .collect();
    ProjectionReport {
        segments: segments.len(),
        pass: failures.is_empty(),
        failures,
    }
}
