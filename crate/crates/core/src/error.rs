use thiserror::Error;

use crate::perm::MAX_DEGREE;

/// Errors raised by group computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {0} exceeds the limit of {MAX_DEGREE} points")]
    DegreeTooLarge(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order does not fit in 64 bits")]
    OrderOverflow,

    #[error("group order {0} exceeds the enumeration cap")]
    OrderExceedsCap(u64),

    #[error("index {0} exceeds the coset-action cap")]
    IndexExceedsCap(u64),

    #[error("element is not in the group")]
    ElementNotInGroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("prime {prime} does not divide the group order {order}")]
    PrimeDoesNotDivideOrder { prime: u64, order: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("the defining characteristic {0} lies in pi")]
    DefiningCharacteristicInPi(u64),

    #[error("pi contains the even prime 2")]
    EvenPrimeInPi,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
