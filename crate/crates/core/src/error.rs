use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    Parse(String),

    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("subgroup count exceeds the cap of {cap}")]
    SubgroupCapExceeded { cap: usize },

    #[error("group is not solvable")]
    NotSolvable,

    #[error("invalid chief series: {0}")]
    InvalidSeries(String),

    #[error("subgroups {lower} and {upper} are not comparable")]
    Incomparable { lower: usize, upper: usize },

    #[error("cover {lower} < {upper} is not weakly separated by any factor")]
    NoSeparation { lower: usize, upper: usize },

    #[error("cover {lower} < {upper} is weakly separated by several factors: {indices:?}")]
    MultipleSeparation {
        lower: usize,
        upper: usize,
        indices: Vec<usize>,
    },

    #[error("product of subgroups {left} and {right} is not a subgroup")]
    ProductNotSubgroup { left: usize, right: usize },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
