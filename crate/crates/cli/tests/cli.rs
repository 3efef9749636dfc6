use std::process::{Command, Output};

use subgroup_el_cli::{
    analyze, to_dot, verify_batch, ExportBundle, GroupSpec, Options, BATCH_HEADER,
    EXIT_CAP_EXCEEDED, EXIT_CHECK_FAILED, EXIT_NOT_SOLVABLE, EXIT_PARSE,
};

fn bundle(name: &str) -> ExportBundle {
    let options = Options {
        dual: true,
        ..Options::default()
    };
    analyze(&GroupSpec::Named(name.into()), &options).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subgroup-el"))
        .args(args)
        .output()
        .unwrap()
}

fn edge_lines(dot: &str) -> Vec<&str> {
    dot.lines().filter(|l| l.contains("->")).collect()
}

#[test]
fn s3_bundle() {
    let b = bundle("S3");
    assert_eq!(b.schema, 1);
    assert_eq!(b.subgroups.len(), 6);
    assert_eq!(b.moebius, 3);
    assert_eq!(b.descending_chains.len(), 3);
    assert_eq!(b.dual_descending_chains.as_ref().unwrap().len(), 3);
    assert!(b.pass);
    assert!(b.checks.as_ref().unwrap().iter().all(|c| c.pass));
}

#[test]
fn trivial_group_passes_vacuously() {
    let b = bundle("C1");
    assert_eq!(b.subgroups.len(), 1);
    assert!(b.edges.is_empty());
    assert_eq!(b.chief_series, [0]);
    assert_eq!(b.complement_chains, [vec![0]]);
    assert!(b.pass);
}

#[test]
fn ids_are_consistent() {
    for name in ["A4", "D6", "SL23"] {
        let b = bundle(name);
        let n = b.subgroups.len();
        assert!(b
            .subgroups
            .iter()
            .flat_map(|s| &s.elements)
            .all(|&e| e < b.group.order));
        assert!(b.subgroups.iter().all(|s| s.elements.len() == s.order));
        assert!(b.edges.iter().all(|e| e.lower < e.upper && e.upper < n));
        assert!(b.chief_series.iter().all(|&t| b.subgroups[t].normal));
        for c in b.descending_chains.iter().chain(&b.complement_chains) {
            assert_eq!(c.first(), Some(&0));
            assert_eq!(c.last(), Some(&(n - 1)));
        }
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    for name in ["S3", "Q8", "S4"] {
        let text = bundle(name).to_json();
        let parsed = ExportBundle::from_json(&text).unwrap();
        assert_eq!(parsed.to_json(), text);
        let plain = analyze(
            &GroupSpec::Named(name.into()),
            &Options {
                verify: false,
                ..Options::default()
            },
        )
        .unwrap();
        assert_eq!(
            ExportBundle::from_json(&plain.to_json()).unwrap().to_json(),
            plain.to_json()
        );
    }
}

#[test]
fn analysis_is_deterministic() {
    assert_eq!(bundle("SL23").to_json(), bundle("SL23").to_json());
    let a = run(&["--threads", "1", "analyze", "--group", "S4", "--dual"]);
    let b = run(&["--threads", "3", "analyze", "--group", "S4", "--dual"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dot_counts() {
    for (name, nodes, edges) in [("S3", 6, 8), ("A4", 10, 15)] {
        let dot = to_dot(&bundle(name));
        assert_eq!(dot.matches("[label=\"").count() - edges, nodes, "{name}");
        assert_eq!(edge_lines(&dot).len(), edges, "{name}");
    }
    for p in ["C2", "C3", "C5", "C7"] {
        let out = run(&["export-dot", "--group", p]);
        let dot = String::from_utf8(out.stdout).unwrap();
        assert_eq!(edge_lines(&dot), ["  n0 -> n1 [label=\"(0,0)\"];"], "{p}");
        assert!(dot.contains("label=\"1:0\"") && dot.contains(&format!("label=\"{}:1\"", &p[1..])));
    }
}

#[test]
fn raw_generators_match_catalog() {
    let named = bundle("S3");
    let raw = analyze(
        &GroupSpec::parse("degree=3; gens=(1 2 3),(1 2)").unwrap(),
        &Options {
            dual: true,
            ..Options::default()
        },
    )
    .unwrap();
    assert_eq!(raw.subgroups, named.subgroups);
    assert_eq!(raw.edges, named.edges);
    let out = run(&["analyze", "--gens", "(1 2 3),(1 2)", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn series_override() {
    // C6 through C3 rather than the canonical C2
    let options = Options {
        series: Some("[], [(1 3 5)(2 4 6)], [(1 2 3 4 5 6)]".into()),
        ..Options::default()
    };
    let b = analyze(&GroupSpec::Named("C6".into()), &options).unwrap();
    assert!(b.pass);
    assert_eq!(b.subgroups[b.chief_series[1]].order, 3);
    assert_eq!(b.complement_chains.len(), 1);
    assert_eq!(b.subgroups[b.complement_chains[0][1]].order, 2);

    let out = run(&[
        "analyze",
        "--group",
        "A4",
        "--series",
        "[], [(1 2 3)], [(1 2 3),(1 2)(3 4)]",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_PARSE));
    let out = run(&["analyze", "--group", "A4", "--series", "[(1 2)]"]);
    assert_eq!(out.status.code(), Some(EXIT_PARSE));
}

#[test]
fn exit_codes() {
    let out = run(&["analyze", "--group", "A5"]);
    assert_eq!(out.status.code(), Some(EXIT_NOT_SOLVABLE));
    assert!(String::from_utf8_lossy(&out.stderr).contains("group is not solvable"));
    assert_eq!(
        run(&["analyze", "--group", "S4", "--max-order", "10"])
            .status
            .code(),
        Some(EXIT_CAP_EXCEEDED)
    );
    assert_eq!(
        run(&["analyze", "--group", "S4", "--max-subgroups", "10"])
            .status
            .code(),
        Some(EXIT_CAP_EXCEEDED)
    );
    assert_eq!(
        run(&["analyze", "--group", "Z9"]).status.code(),
        Some(EXIT_PARSE)
    );
    assert_eq!(
        run(&["analyze", "--gens", "(1 4)", "--degree", "3"])
            .status
            .code(),
        Some(EXIT_PARSE)
    );
    assert_eq!(
        run(&["analyze", "--group", "C1", "--no-verify"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("subgroup-el-out-{}.json", std::process::id()));
    let out = run(&["analyze", "--group", "Q8", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let b = ExportBundle::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!((b.group.order, b.subgroups.len(), b.moebius), (8, 6, 0));
}

#[test]
fn batch_rows() {
    let outcome = verify_batch("# comment\nS3\n\nA5  # not solvable\n", &Options::default());
    assert_eq!(outcome.rows.len(), 2);
    assert_eq!(outcome.exit_code(), EXIT_CHECK_FAILED);
    let table = outcome.table();
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], BATCH_HEADER);
    assert!(lines[1].starts_with("S3\t6\t6\t2\t3\t3\t3\tPASS\tPASS\tPASS\t"));
    assert!(lines[2].starts_with("A5\t") && lines[2].contains("NOT_SOLVABLE"));
    assert_eq!(outcome.bundles().len(), 1);

    let empty = verify_batch("", &Options::default());
    assert_eq!(empty.exit_code(), 0);
    assert_eq!(empty.table(), format!("{BATCH_HEADER}\n"));
}

#[test]
fn default_catalog_batch_passes() {
    let out = run(&["verify-batch"]);
    assert_eq!(out.status.code(), Some(0));
    let table = String::from_utf8(out.stdout).unwrap();
    assert_eq!(table.lines().count(), 11);
    assert!(table
        .lines()
        .skip(1)
        .all(|l| l.split('\t').nth(9) == Some("PASS")));
}
