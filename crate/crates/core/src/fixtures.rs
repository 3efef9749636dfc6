//! Small named groups shared by unit tests.

use std::sync::Arc;

use crate::perm_group::{chief_series, ChiefSeries, Group, Permutation, DEFAULT_MAX_ORDER};
use crate::subgroup_lattice::{NodeId, SubgroupLattice, DEFAULT_MAX_SUBGROUPS};

pub fn generators(name: &str) -> (usize, Vec<&'static str>) {
    match name {
        "C1" => (1, vec![]),
        "C2" => (2, vec!["(1 2)"]),
        "C3" => (3, vec!["(1 2 3)"]),
        "C5" => (5, vec!["(1 2 3 4 5)"]),
        "C6" => (6, vec!["(1 2 3 4 5 6)"]),
        "C12" => (12, vec!["(1 2 3 4 5 6 7 8 9 10 11 12)"]),
        "V4" => (4, vec!["(1 2)(3 4)", "(1 3)(2 4)"]),
        "E8" => (6, vec!["(1 2)", "(3 4)", "(5 6)"]),
        "S3" => (3, vec!["(1 2)", "(1 2 3)"]),
        "D4" => (4, vec!["(1 2 3 4)", "(1 3)"]),
        "D6" => (6, vec!["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
        "Q8" => (8, vec!["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"]),
        "A4" => (4, vec!["(1 2 3)", "(1 2)(3 4)"]),
        "SL23" => (8, vec!["(1 4 7)(2 8 5)", "(3 4 5)(6 8 7)"]),
        "S4" => (4, vec!["(1 2 3 4)", "(1 2)"]),
        "A5" => (5, vec!["(1 2 3 4 5)", "(1 2 3)"]),
        other => panic!("no fixture {other}"),
    }
}

pub fn group(name: &str) -> Group {
    let (degree, gens) = generators(name);
    let gens: Vec<Permutation> = gens
        .iter()
        .map(|t| Permutation::parse(t, degree).unwrap())
        .collect();
    Group::generate(&gens, degree, DEFAULT_MAX_ORDER).unwrap()
}

pub fn lattice(name: &str) -> SubgroupLattice {
    SubgroupLattice::enumerate(Arc::new(group(name)), DEFAULT_MAX_SUBGROUPS).unwrap()
}

pub fn with_series(name: &str) -> (SubgroupLattice, ChiefSeries) {
    let l = lattice(name);
    let s = chief_series(&l).unwrap();
    (l, s)
}

/// Node id of the subgroup generated by the given cycle strings.
pub fn node(l: &SubgroupLattice, gens: &[&str]) -> NodeId {
    let g = l.group();
    let ids = gens.iter().map(|t| {
        g.index_of(&Permutation::parse(t, g.degree()).unwrap())
            .unwrap()
    });
    l.id_of(g.subgroup_closure(ids).member_set()).unwrap()
}
