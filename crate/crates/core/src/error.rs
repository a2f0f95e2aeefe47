use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid tuple: {0}")]
    InvalidTuple(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{what} has {count} elements, above the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        count: u128,
        limit: u128,
    },

    #[error("search budget of {0} tree nodes exceeded")]
    BudgetExceeded(u64),

    #[error("group order does not fit in 128 bits")]
    OrderOverflow,

    #[error("family is not invariant under the group: {0}")]
    NotInvariant(String),

    #[error("action on {0} points is not transitive")]
    Intransitive(usize),

    #[error("not a block system: {0}")]
    NotBlockSystem(String),

    #[error("candidate map is not an automorphism: {0}")]
    UnverifiedCandidate(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Resource guards (search budget, enumeration and size limits) as
    /// opposed to malformed input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_) | Error::LimitExceeded { .. })
    }
}
