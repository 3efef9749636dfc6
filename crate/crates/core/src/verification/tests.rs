use super::*;
use crate::fixtures::{lattice, node, with_series};
use crate::labeling::{label_lattice, label_lattice_dual, Label};
use crate::perm_group::{all_chief_series, ChiefSeries};
use crate::subgroup_lattice::{NodeId, Orientation, SubgroupLattice};

/// Complement chains by brute force over all k-tuples of subgroups,
/// checking the defining conditions on raw element sets.
fn complement_oracle(l: &SubgroupLattice, s: &ChiefSeries) -> Vec<Vec<NodeId>> {
    let g = l.group();
    let k = s.length();
    let is_complement = |h: NodeId, n: NodeId| {
        let (h, n) = (l.node(h), l.node(n));
        let meets_trivially = h.members().filter(|&x| n.contains(x)).count() == 1;
        let mut product = std::collections::BTreeSet::new();
        for a in h.members() {
            for b in n.members() {
                product.insert(g.mul(a, b));
            }
        }
        meets_trivially && product.len() == g.order()
    };
    let mut out = Vec::new();
    let mut tuple = vec![0; k + 1];
    fn rec(
        l: &SubgroupLattice,
        s: &ChiefSeries,
        i: usize,
        tuple: &mut Vec<NodeId>,
        out: &mut Vec<Vec<NodeId>>,
        ok: &dyn Fn(NodeId, NodeId) -> bool,
    ) {
        if i == tuple.len() {
            // H_k ⊂ ... ⊂ H_0
            if tuple
                .windows(2)
                .all(|w| l.node(w[1]).is_subgroup_of(l.node(w[0])) && w[0] != w[1])
            {
                out.push(tuple.iter().rev().copied().collect());
            }
            return;
        }
        for h in 0..l.len() {
            if ok(h, s.term(i)) {
                tuple[i] = h;
                rec(l, s, i + 1, tuple, out, ok);
            }
        }
    }
    rec(l, s, 0, &mut tuple, &mut out, &is_complement);
    out.sort();
    out
}

#[test]
fn complement_search_matches_oracle() {
    let expected = [
        ("C1", 1),
        ("S3", 3),
        ("A4", 4),
        ("Q8", 0),
        ("C6", 1),
        ("D4", 0),
        ("S4", 12),
        ("SL23", 0),
        ("E8", 8),
        ("D6", 6),
        ("C12", 0),
    ];
    for (name, count) in expected {
        let (l, s) = with_series(name);
        let oracle = complement_oracle(&l, &s);
        assert_eq!(oracle.len(), count, "oracle {name}");
        let found: Vec<Vec<NodeId>> = chains_of_complements(&l, &s)
            .into_iter()
            .map(|c| c.subgroups)
            .collect();
        assert_eq!(found, oracle, "{name}");
    }
}

#[test]
fn complement_chain_examples() {
    let (c6, s) = with_series("C6");
    let chains = chains_of_complements(&c6, &s);
    // canonical series is 1 < C2 < C6, so H_1 complements C2
    assert_eq!(chains.len(), 1);
    assert_eq!(c6.node(chains[0].subgroups[1]).order(), 3);
    let via_c3 = ChiefSeries::from_terms(
        &c6,
        vec![c6.bottom(), node(&c6, &["(1 3 5)(2 4 6)"]), c6.top()],
    )
    .unwrap();
    let chains = chains_of_complements(&c6, &via_c3);
    assert_eq!(chains.len(), 1);
    assert_eq!(c6.node(chains[0].subgroups[1]).order(), 2);

    let (a4, s) = with_series("A4");
    let chains = chains_of_complements(&a4, &s);
    assert_eq!(chains.len(), 4);
    assert!(chains.iter().all(|c| a4.node(c.subgroups[1]).order() == 3));

    let (q8, s) = with_series("Q8");
    assert!(chains_of_complements(&q8, &s).is_empty());
}

#[test]
fn el_examples() {
    let (c5, s) = with_series("C5");
    let r = check_el(&label_lattice(&c5, &s).unwrap());
    assert!(r.pass);
    assert_eq!(r.records.len(), 1);

    let (s3, s) = with_series("S3");
    let r = check_el(&label_lattice(&s3, &s).unwrap());
    assert!(r.pass, "{:?}", r.failures().collect::<Vec<_>>());
    // comparable pairs: 1 below five, three C2s and A3 below S3
    assert_eq!(r.records.len(), 9);
    for rec in &r.records {
        assert_eq!(rec.increasing, 1);
        assert_eq!(rec.lex_first, rec.increasing_chain);
    }
}

#[test]
fn el_holds_for_small_catalog_in_both_orientations() {
    for name in ["A4", "Q8", "D4", "S4", "SL23", "E8", "D6", "C12"] {
        let (l, s) = with_series(name);
        let p = check_el(&label_lattice(&l, &s).unwrap());
        assert!(p.pass, "{name}: {:?}", p.failures().next());
        let d = check_el(&label_lattice_dual(&l, &s).unwrap());
        assert!(d.pass, "{name} dual: {:?}", d.failures().next());
        assert_eq!(d.orientation, Orientation::Dual);
    }
}

#[test]
fn el_check_rejects_a_scrambled_labeling() {
    // Labelling every cover of L(S3) by the id of its upper end breaks
    // uniqueness on [1, S3]: the chain through A3 and the one through the
    // least C2 both increase.
    let (s3, s) = with_series("S3");
    let labeled = label_lattice(&s3, &s).unwrap();
    let view = labeled.view();
    let iv = view.interval(s3.bottom(), s3.top()).unwrap();
    let increasing = view
        .maximal_chains(&iv)
        .iter()
        .filter(|c| {
            let ls: Vec<Label> = c
                .windows(2)
                .map(|w| Label {
                    coarse: w[1],
                    fine: 0,
                })
                .collect();
            ls.windows(2).all(|w| w[0] <= w[1])
        })
        .count();
    assert_eq!(increasing, 4);
}

#[test]
fn descending_chain_examples() {
    let (c5, s) = with_series("C5");
    assert_eq!(
        descending_chains(&label_lattice(&c5, &s).unwrap()),
        vec![vec![0, 1]]
    );

    let (s3, s) = with_series("S3");
    let desc = descending_chains(&label_lattice(&s3, &s).unwrap());
    let mut through_c2: Vec<Vec<NodeId>> = ["(1 2)", "(1 3)", "(2 3)"]
        .iter()
        .map(|t| vec![s3.bottom(), node(&s3, &[t]), s3.top()])
        .collect();
    through_c2.sort();
    assert_eq!(desc, through_c2);

    let (q8, s) = with_series("Q8");
    assert!(descending_chains(&label_lattice(&q8, &s).unwrap()).is_empty());

    let (a4, s) = with_series("A4");
    assert_eq!(
        descending_chains(&label_lattice_dual(&a4, &s).unwrap()).len(),
        4
    );
}

#[test]
fn descending_chains_are_chains_of_complements() {
    for name in [
        "C1", "S3", "A4", "Q8", "C6", "D4", "S4", "SL23", "E8", "D6", "C12",
    ] {
        let (l, s) = with_series(name);
        for labeled in [
            label_lattice(&l, &s).unwrap(),
            label_lattice_dual(&l, &s).unwrap(),
        ] {
            let cmp = check_descending_equals_complements(&labeled);
            assert!(cmp.equal, "{name} {:?}: {cmp:?}", labeled.orientation());
            assert!(cmp.coarse_pattern, "{name} {:?}", labeled.orientation());
        }
    }
}

#[test]
fn thevenaz_examples() {
    for (name, mu, k, count) in [
        ("S3", 3, 2, 3),
        ("A4", 4, 2, 4),
        ("Q8", 0, 3, 0),
        ("C1", 1, 0, 1),
        ("S4", -12, 3, 12),
    ] {
        let (l, s) = with_series(name);
        let r = check_thevenaz(&label_lattice(&l, &s).unwrap());
        assert_eq!(
            (r.moebius, r.length, r.complement_chains),
            (mu, k, count),
            "{name}"
        );
        assert!(r.pass, "{name}");
    }
}

#[test]
fn descending_count_is_independent_of_the_chief_series() {
    for name in ["C6", "E8", "D6", "C12", "D4"] {
        let l = lattice(name);
        let all = all_chief_series(&l).unwrap();
        assert!(all.len() > 1, "{name} has a single chief series");
        let counts: Vec<usize> = all
            .iter()
            .map(|s| descending_chains(&label_lattice(&l, s).unwrap()).len())
            .collect();
        assert!(
            counts.windows(2).all(|w| w[0] == w[1]),
            "{name}: {counts:?}"
        );
        for s in &all {
            assert!(
                check_el(&label_lattice(&l, s).unwrap()).pass,
                "{name} {s:?}"
            );
        }
    }
}

#[test]
fn projection_examples() {
    let (a4, s) = with_series("A4");
    let sv = label_lattice(&a4, &s).unwrap().series_view();
    let c3 = node(&a4, &["(1 2 3)"]);
    assert_eq!(check_segment(&sv, 0, c3, a4.top()), Ok(()));
    let sec = sv.section(0, c3);
    assert_eq!(sec.members(), &[a4.bottom(), s.term(1)]);

    for (e, f) in a4.cover_edges() {
        let i = sv.weak_separation_index(e, f).unwrap();
        assert_eq!(check_segment(&sv, i, e, f), Ok(()));
    }
    // [1, A4] is not a single segment
    assert!(check_segment(&sv, 0, a4.bottom(), a4.top()).is_err());
}

#[test]
fn projection_isomorphisms_hold() {
    for name in ["S4", "SL23", "D6", "A4", "Q8"] {
        let (l, s) = with_series(name);
        for labeled in [
            label_lattice(&l, &s).unwrap(),
            label_lattice_dual(&l, &s).unwrap(),
        ] {
            let r = check_projection_isomorphisms(&labeled);
            assert!(r.pass, "{name}: {:?}", r.failures);
            assert!(r.segments >= l.cover_edges().len());
        }
    }
}

#[test]
fn coarse_skeleton_sets_agree() {
    for name in ["A4", "S4", "SL23"] {
        let (l, s) = with_series(name);
        for labeled in [
            label_lattice(&l, &s).unwrap(),
            label_lattice_dual(&l, &s).unwrap(),
        ] {
            let intervals = all_intervals(&labeled.view());
            let r = check_coarse_skeleton(&labeled, &intervals);
            assert!(r.pass, "{name}: {:?}", r.failures);
        }
    }
}

#[test]
fn structural_checks_pass() {
    for name in ["S4", "SL23", "D6", "Q8"] {
        let (l, s) = with_series(name);
        assert!(check_liu_equivalence(&l).pass, "{name}");
        for labeled in [
            label_lattice(&l, &s).unwrap(),
            label_lattice_dual(&l, &s).unwrap(),
        ] {
            let r = check_section_invariants(&labeled);
            assert!(r.pass, "{name}: {:?}", r.failures);
        }
    }
}

#[test]
fn interval_sampling_is_full_below_the_limit() {
    let (l, _) = with_series("S4");
    let v = l.view(Orientation::Primal);
    assert_eq!(checked_intervals(&v), all_intervals(&v));
    let count = (0..l.len())
        .map(|a| (0..l.len()).filter(|&b| l.lt(a, b)).count())
        .sum::<usize>();
    assert_eq!(all_intervals(&v).len(), count);
}
