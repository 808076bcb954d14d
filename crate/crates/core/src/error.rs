use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group closure exceeds the size bound of {bound} elements")]
    SizeLimit { bound: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unknown group name `{0}`")]
    UnknownGroup(String),

    #[error("catalog is not section-closed: {group} has a subquotient of order {order} isomorphic to no listed group")]
    NotSectionClosed { group: String, order: usize },

    #[error("catalog lists isomorphic groups `{0}` and `{1}`")]
    DuplicateGroup(String, String),

    #[error("brauer parameter delta must be nonzero")]
    ZeroDelta,

    #[error("diagram does not lie in the maximal subgroup of J-class {class}")]
    NotInMaximalSubgroup { class: usize },

    #[error("oracle instance too large: {0}")]
    OracleBound(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
