//! Pipeline behind the `subgroup-el` binary: resolve a group, enumerate its
//! subgroup lattice, label it from a chief series, run the checkers, and
//! package everything as an [`ExportBundle`].

pub mod bundle;
pub mod catalog;
pub mod dot;

use std::fmt::Write;
use std::sync::Arc;
use std::time::Instant;

use subgroup_el::labeling::{label_lattice, label_lattice_dual, LabeledLattice};
use subgroup_el::perm_group::{chief_series, Group, DEFAULT_MAX_ORDER};
use subgroup_el::subgroup_lattice::{SubgroupLattice, DEFAULT_MAX_SUBGROUPS};
use subgroup_el::verification::{
    chains_of_complements, check_coarse_skeleton, check_descending_equals_complements, check_el,
    check_liu_equivalence, check_projection_isomorphisms, check_section_invariants, check_thevenaz,
    checked_intervals, descending_chains,
};
use subgroup_el::Error;
use thiserror::Error;

pub use bundle::{CheckResult, EdgeInfo, ExportBundle, GroupInfo, SubgroupInfo, SCHEMA_VERSION};
pub use catalog::{resolve_catalog, GroupSpec, ResolvedGroup, DEFAULT_CATALOG};
pub use dot::to_dot;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_NOT_SOLVABLE: i32 = 2;
pub const EXIT_CAP_EXCEEDED: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Catalog(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::NotSolvable) => EXIT_NOT_SOLVABLE,
            CliError::Core(Error::OrderCapExceeded { .. } | Error::SubgroupCapExceeded { .. }) => {
                EXIT_CAP_EXCEEDED
            }
            CliError::Core(
                Error::Parse(_) | Error::DegreeMismatch { .. } | Error::InvalidSeries(_),
            )
            | CliError::Catalog(_)
            | CliError::Parse(_) => EXIT_PARSE,
            CliError::Core(_) | CliError::Io { .. } => EXIT_CHECK_FAILED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Chief series override, see [`catalog::parse_series`].
    pub series: Option<String>,
    pub dual: bool,
    pub verify: bool,
    pub max_order: usize,
    pub max_subgroups: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            series: None,
            dual: false,
            verify: true,
            max_order: DEFAULT_MAX_ORDER,
            max_subgroups: DEFAULT_MAX_SUBGROUPS,
        }
    }
}

/// Exit status for a finished analysis.
pub fn verdict_exit_code(bundle: &ExportBundle) -> i32 {
    if bundle.pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

/// Runs the whole pipeline. Solvability is checked before the lattice is
/// enumerated, so non-solvable input never reaches the labeling.
pub fn analyze(spec: &GroupSpec, options: &Options) -> Result<ExportBundle, CliError> {
    let resolved = spec.resolve()?;
    let group = Group::generate(&resolved.generators, resolved.degree, options.max_order)?;
    if !group.is_solvable() {
        return Err(Error::NotSolvable.into());
    }
    let lattice = SubgroupLattice::enumerate(Arc::new(group), options.max_subgroups)?;
    let series = match &options.series {
        Some(text) => catalog::parse_series(text, &lattice)?,
        None => chief_series(&lattice)?,
    };
    let primal = label_lattice(&lattice, &series)?;
    let dual = if options.dual {
        Some(label_lattice_dual(&lattice, &series)?)
    } else {
        None
    };
    let checks = options.verify.then(|| run_checks(&primal, dual.as_ref()));
    let pass = checks.as_ref().is_none_or(|cs| cs.iter().all(|c| c.pass));

    let g = lattice.group();
    let edges = lattice
        .cover_edges()
        .into_iter()
        .map(|(lower, upper)| {
            let l = primal.label(lower, upper).expect("every cover is labelled");
            EdgeInfo {
                lower,
                upper,
                label: [l.coarse, l.fine],
                dual_label: dual.as_ref().map(|d| {
                    let l = d.label(upper, lower).expect("every cover is labelled");
                    [l.coarse, l.fine]
                }),
            }
        })
        .collect();

    Ok(ExportBundle {
        schema: SCHEMA_VERSION,
        group: GroupInfo {
            name: resolved.name,
            order: g.order(),
            degree: g.degree(),
            generators: resolved.generators.iter().map(|p| p.to_string()).collect(),
            elements: g.elements().iter().map(|p| p.to_string()).collect(),
        },
        subgroups: (0..lattice.len())
            .map(|id| SubgroupInfo {
                order: lattice.node(id).order(),
                normal: lattice.is_normal(id),
                elements: lattice.node(id).members().collect(),
            })
            .collect(),
        chief_series: series.terms().to_vec(),
        edges,
        descending_chains: descending_chains(&primal),
        dual_descending_chains: dual.as_ref().map(descending_chains),
        complement_chains: chains_of_complements(&lattice, &series)
            .into_iter()
            .map(|c| c.subgroups)
            .collect(),
        moebius: lattice.moebius_top(),
        checks,
        pass,
    })
}

fn check(name: &str, checked: usize, failures: usize) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        checked,
        failures,
        pass: failures == 0,
    }
}

fn run_checks(primal: &LabeledLattice<'_>, dual: Option<&LabeledLattice<'_>>) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let labelings: Vec<(&LabeledLattice<'_>, &str)> = std::iter::once((primal, ""))
        .chain(dual.map(|d| (d, "_dual")))
        .collect();
    for &(labeled, suffix) in &labelings {
        let el = check_el(labeled);
        out.push(check(
            &format!("el{suffix}"),
            el.records.len(),
            el.failures().count(),
        ));
    }
    for &(labeled, suffix) in &labelings {
        let d = check_descending_equals_complements(labeled);
        let bad = usize::from(!d.equal) + usize::from(!d.coarse_pattern);
        out.push(check(
            &format!("descending_complements{suffix}"),
            d.complements,
            bad,
        ));
    }
    let t = check_thevenaz(primal);
    out.push(check("moebius", 1, usize::from(!t.pass)));
    for &(labeled, suffix) in &labelings {
        let p = check_projection_isomorphisms(labeled);
        out.push(check(
            &format!("projection{suffix}"),
            p.segments,
            p.failures.len(),
        ));
    }
    for &(labeled, suffix) in &labelings {
        let intervals = checked_intervals(&labeled.view());
        let c = check_coarse_skeleton(labeled, &intervals);
        out.push(check(
            &format!("coarse_skeleton{suffix}"),
            c.intervals,
            c.failures.len(),
        ));
    }
    let liu = check_liu_equivalence(primal.lattice());
    out.push(check(
        "liu_equivalence",
        liu.nodes,
        liu.disagreements.len() + liu.normal_not_left_modular.len(),
    ));
    for &(labeled, suffix) in &labelings {
        let s = check_section_invariants(labeled);
        out.push(check(
            &format!("section_invariants{suffix}"),
            s.sections,
            s.failures.len(),
        ));
    }
    out
}

/// One line of a batch run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchRow {
    pub spec: String,
    pub outcome: Result<ExportBundle, String>,
    /// Exit code this row would have had on its own.
    pub exit_code: i32,
    pub millis: u128,
}

#[derive(Clone, Debug, Default)]
pub struct BatchOutcome {
    pub rows: Vec<BatchRow>,
}

pub const BATCH_HEADER: &str =
    "group\torder\tsubgroups\tk\tmu\tdescending\tcomplements\tel\tel_dual\tstatus\tms";

impl BatchOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.rows.iter().all(|r| r.exit_code == EXIT_OK) {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }

    pub fn bundles(&self) -> Vec<ExportBundle> {
        self.rows
            .iter()
            .filter_map(|r| r.outcome.clone().ok())
            .collect()
    }

    /// Tab-separated summary with a header line.
    pub fn table(&self) -> String {
        let mut out = String::from(BATCH_HEADER);
        out.push('\n');
        for row in &self.rows {
            let _ = write!(out, "{}\t", row.spec);
            match &row.outcome {
                Ok(b) => {
                    let verdict = |name: &str| match b.check(name) {
                        Some(c) if c.pass => "PASS",
                        Some(_) => "FAIL",
                        None => "SKIPPED",
                    };
                    let _ = write!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        b.group.order,
                        b.subgroups.len(),
                        b.length(),
                        b.moebius,
                        b.descending_chains.len(),
                        b.complement_chains.len(),
                        verdict("el"),
                        verdict("el_dual"),
                        if b.pass { "PASS" } else { "FAIL" },
                    );
                }
                Err(msg) => {
                    let status = match row.exit_code {
                        EXIT_NOT_SOLVABLE => "NOT_SOLVABLE".to_string(),
                        _ => format!("ERROR: {msg}"),
                    };
                    let _ = write!(out, "-\t-\t-\t-\t-\t-\t-\t-\t{status}");
                }
            }
            let _ = writeln!(out, "\t{}", row.millis);
        }
        out
    }
}

/// Analyzes every non-comment line of `list` with both labelings and all
/// checks enabled. Failures are recorded per row and never stop the batch.
pub fn verify_batch(list: &str, options: &Options) -> BatchOutcome {
    let options = Options {
        series: None,
        dual: true,
        verify: true,
        ..options.clone()
    };
    let rows = list
        .lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty())
        .map(|line| {
            let start = Instant::now();
            let result = GroupSpec::parse(line).and_then(|spec| analyze(&spec, &options));
            let millis = start.elapsed().as_millis();
            let (outcome, exit_code) = match result {
                Ok(bundle) => {
                    let code = verdict_exit_code(&bundle);
                    (Ok(bundle), code)
                }
                Err(e) => (Err(e.to_string()), e.exit_code()),
            };
            BatchRow {
                spec: line.to_string(),
                outcome,
                exit_code,
                millis,
            }
        })
        .collect();
    BatchOutcome { rows }
}
