use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid beta-set: {0}")]
    InvalidBetaSet(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The initial gap of a partition with fewer than two parts.
    #[error("initial gap is undefined for partitions with fewer than two parts")]
    Undefined,

    #[error("{s} and {t} are not coprime; the family of ({s}, {t})-core partitions is infinite")]
    NonCoprime { s: i64, t: i64 },

    #[error("gap set has {needed} elements, enumeration budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("abacus/core correspondence not guaranteed for r = {r}, d = {d} (need 1 <= r <= d or r = -1)")]
    CorrespondenceNotGuaranteed { r: i64, d: i64 },

    #[error("{0} is not in the family")]
    NotInFamily(String),

    #[error("not a composition of {s}: {detail}")]
    NotACompositionOf { s: i64, detail: String },
}
