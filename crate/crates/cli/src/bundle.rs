//! The JSON export format. Field order is fixed by declaration order, and
//! every value is an integer, string or boolean, so serializing a parsed
//! bundle reproduces the original bytes.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportBundle {
    pub schema: u32,
    pub group: GroupInfo,
    /// Indexed by canonical node id; 0 is the trivial subgroup.
    pub subgroups: Vec<SubgroupInfo>,
    /// Node ids, trivial subgroup first.
    pub chief_series: Vec<usize>,
    /// Cover relations `lower ⋖ upper` in ascending order.
    pub edges: Vec<EdgeInfo>,
    /// Chains with strictly decreasing labels, listed bottom to top.
    pub descending_chains: Vec<Vec<usize>>,
    pub dual_descending_chains: Option<Vec<Vec<usize>>>,
    /// Chains of complements, listed bottom to top.
    pub complement_chains: Vec<Vec<usize>>,
    pub moebius: i64,
    /// Absent with `--no-verify`.
    pub checks: Option<Vec<CheckResult>>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub degree: usize,
    pub generators: Vec<String>,
    /// Cycle notation, 1-based points; subgroups index into this list.
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupInfo {
    pub order: usize,
    pub normal: bool,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeInfo {
    pub lower: usize,
    pub upper: usize,
    pub label: [usize; 2],
    pub dual_label: Option<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub pass: bool,
}

impl ExportBundle {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("bundle serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.as_ref()?.iter().find(|c| c.name == name)
    }

    /// Length of the chief series.
    pub fn length(&self) -> usize {
        self.chief_series.len().saturating_sub(1)
    }
}

pub fn batch_json(bundles: &[ExportBundle]) -> String {
    let mut text = serde_json::to_string_pretty(bundles).expect("bundles serialize");
    text.push('\n');
    text
}
