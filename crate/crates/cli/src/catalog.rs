//! Named groups and the textual group/series formats.

use subgroup_el::perm_group::{ChiefSeries, Group, Permutation};
use subgroup_el::subgroup_lattice::{NodeId, SubgroupLattice};

use crate::CliError;

/// Largest parameter accepted by the parametrised families.
pub const MAX_PARAMETER: usize = 64;

/// Group given either by catalog name or by explicit generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Named(String),
    Raw { degree: usize, gens: String },
}

/// A spec resolved to concrete generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedGroup {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    /// Reads either `degree=<n>; gens=<perm>,<perm>,...` or a catalog name.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let text = text.trim();
        if !text.contains('=') {
            if text.is_empty() {
                return Err(CliError::Parse("empty group spec".into()));
            }
            return Ok(GroupSpec::Named(text.to_string()));
        }
        let mut degree = None;
        let mut gens = None;
        for field in text.split(';') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| CliError::Parse(format!("expected key=value, got {field:?}")))?;
            match key.trim() {
                "degree" => {
                    let d = value
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| CliError::Parse(format!("bad degree {value:?}")))?;
                    degree = Some(d);
                }
                "gens" => gens = Some(value.trim().to_string()),
                other => return Err(CliError::Parse(format!("unknown field {other:?}"))),
            }
        }
        match (degree, gens) {
            (Some(degree), gens) => Ok(GroupSpec::Raw {
                degree,
                gens: gens.unwrap_or_default(),
            }),
            (None, _) => Err(CliError::Parse("group spec is missing degree=".into())),
        }
    }

    pub fn resolve(&self) -> Result<ResolvedGroup, CliError> {
        match self {
            GroupSpec::Named(name) => resolve_catalog(name),
            GroupSpec::Raw { degree, gens } => {
                if *degree == 0 {
                    return Err(CliError::Parse("degree must be positive".into()));
                }
                Ok(ResolvedGroup {
                    name: format!("degree={degree}; gens={gens}"),
                    degree: *degree,
                    generators: parse_generators(gens, *degree)?,
                })
            }
        }
    }
}

/// Splits on commas that are not inside parentheses or brackets.
pub(crate) fn split_top_level(text: &str) -> Result<Vec<&str>, CliError> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (pos, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(CliError::Parse(format!("unbalanced {ch:?} in {text:?}")));
                }
            }
            ',' if depth == 0 => {
                parts.push(&text[start..pos]);
                start = pos + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(CliError::Parse(format!("unbalanced brackets in {text:?}")));
    }
    parts.push(&text[start..]);
    Ok(parts
        .into_iter()
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect())
}

/// Comma-separated permutations in cycle notation, 1-based.
pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Permutation>, CliError> {
    split_top_level(text)?
        .into_iter()
        .map(|p| Permutation::parse(p, degree).map_err(CliError::from))
        .collect()
}

fn cycle(points: impl IntoIterator<Item = usize>) -> String {
    let points: Vec<String> = points.into_iter().map(|p| p.to_string()).collect();
    format!("({})", points.join(" "))
}

fn fixed(name: &str, degree: usize, gens: &[&str]) -> Result<ResolvedGroup, CliError> {
    Ok(ResolvedGroup {
        name: name.to_string(),
        degree,
        generators: gens
            .iter()
            .map(|g| Permutation::parse(g, degree))
            .collect::<Result<_, _>>()?,
    })
}

/// Generators for a catalog name: `C<n>`, `D<n>` (order `2n`), `S<n>`,
/// `A<n>`, `Q8`, `V4`, `E8`, `SL23`.
pub fn resolve_catalog(name: &str) -> Result<ResolvedGroup, CliError> {
    let unknown = || CliError::Catalog(format!("unknown group {name:?}"));
    match name {
        // regular representation on the units 1, -1, i, -i, j, -j, k, -k
        "Q8" => return fixed(name, 8, &["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"]),
        "V4" => return fixed(name, 4, &["(1 2)(3 4)", "(1 3)(2 4)"]),
        "E8" => return fixed(name, 6, &["(1 2)", "(3 4)", "(5 6)"]),
        // action on the nonzero vectors of F_3^2
        "SL23" => return fixed(name, 8, &["(1 4 7)(2 8 5)", "(3 4 5)(6 8 7)"]),
        _ => {}
    }
    let mut chars = name.chars();
    let family = chars.next().ok_or_else(unknown)?;
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let out_of_range = |min: usize| {
        CliError::Catalog(format!(
            "parameter of {name:?} must lie in {min}..={MAX_PARAMETER}"
        ))
    };
    let gens: Vec<String> = match family {
        'C' => {
            if !(1..=MAX_PARAMETER).contains(&n) {
                return Err(out_of_range(1));
            }
            if n == 1 {
                vec![]
            } else {
                vec![cycle(1..=n)]
            }
        }
        'D' => {
            if !(3..=MAX_PARAMETER).contains(&n) {
                return Err(out_of_range(3));
            }
            let reflection: String = (1..=n / 2).map(|i| cycle([i, n + 1 - i])).collect();
            vec![cycle(1..=n), reflection]
        }
        'S' => {
            if !(1..=MAX_PARAMETER).contains(&n) {
                return Err(out_of_range(1));
            }
            match n {
                1 => vec![],
                2 => vec![cycle([1, 2])],
                _ => vec![cycle(1..=n), cycle([1, 2])],
            }
        }
        'A' => {
            if !(1..=MAX_PARAMETER).contains(&n) {
                return Err(out_of_range(1));
            }
            (3..=n).map(|i| cycle([1, 2, i])).collect()
        }
        _ => return Err(unknown()),
    };
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    fixed(name, n, &refs)
}

/// Reads a chief series given as bracketed generator lists, bottom first:
/// `[], [(1 2)(3 4),(1 3)(2 4)], [(1 2 3),(1 2)(3 4)]`.
pub fn parse_series(text: &str, lattice: &SubgroupLattice) -> Result<ChiefSeries, CliError> {
    let group: &Group = lattice.group();
    let mut terms: Vec<NodeId> = Vec::new();
    for term in split_top_level(text)? {
        let inner = term
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| CliError::Parse(format!("series term {term:?} is not a [..] list")))?;
        let mut ids = Vec::new();
        for g in parse_generators(inner, group.degree())? {
            let id = group
                .index_of(&g)
                .ok_or_else(|| CliError::Parse(format!("{g} is not an element of the group")))?;
            ids.push(id);
        }
        let sub = group.subgroup_closure(ids);
        let node = lattice.id_of(sub.member_set()).ok_or_else(|| {
            CliError::Parse(format!("series term {term:?} is not in the lattice"))
        })?;
        terms.push(node);
    }
    Ok(ChiefSeries::from_terms(lattice, terms)?)
}

/// Catalog exercised by `verify-batch` when no file is given.
pub const DEFAULT_CATALOG: &str = include_str!("../catalog/default.txt");
