use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible permutations: degree {left} vs degree {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group too large to enumerate (cap {cap}); use a structured descriptor instead")]
    TooLarge { cap: u64 },

    #[error("element is not in the group")]
    NotInGroup,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field of order {q} exceeds the size cap {cap}")]
    FieldTooLarge { q: u128, cap: u64 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no faithful action exists: {order} does not divide {q} - 1")]
    NoFaithfulAction { order: u64, q: u64 },

    #[error("unsupported family for {operation}: {family}; use the concrete group instead")]
    UnsupportedFamily { operation: &'static str, family: String },

    #[error("vacuous case: q = {q}, l = {l} carries no information")]
    VacuousCase { q: u64, l: u64 },

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),

    #[error("field context {0} is not of characteristic 0")]
    NotCharacteristicZero(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid group spec: {0}")]
    Semantic(String),

    #[error("unknown field context: {0}")]
    UnknownField(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Parse and usage problems, as opposed to failures of a computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::Semantic(_) | Error::UnknownField(_)
        )
    }
}
