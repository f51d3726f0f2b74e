use thiserror::Error;

use crate::verdict::Witness;

/// Input errors. Property failures are reported as [`crate::Verdict::Fail`],
/// never through this type, except where a constructor refuses to build an
/// invalid structure ([`Error::Invalid`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("sort set must be non-empty")]
    EmptySorts,
    #[error("carrier size {n} exceeds the supported maximum of {max}")]
    CarrierTooLarge { n: usize, max: usize },
    #[error("table has {got} entries, expected {expected}")]
    TableDimension { expected: usize, got: usize },
    #[error("table entry ({a}, {g}, {b}) = {value} is outside the carrier [0, {n})")]
    TableEntryOutOfRange {
        a: usize,
        g: usize,
        b: usize,
        value: usize,
        n: usize,
    },
    #[error("relation matrix has {got} entries, expected {expected}")]
    RelationDimension { expected: usize, got: usize },
    #[error("element id {id} is outside the carrier [0, {n})")]
    ElementOutOfRange { id: usize, n: usize },
    #[error("sort id {id} is outside the sort set [0, {m})")]
    GammaOutOfRange { id: usize, m: usize },
    #[error("subset is over a carrier of size {got}, expected {expected}")]
    CarrierMismatch { expected: usize, got: usize },
    #[error("subset must be non-empty")]
    EmptySubset,
    #[error("fuzzy subset has no positive grade")]
    ZeroFuzzySubset,
    #[error("array of length {len} is not a permutation of [0, {n})")]
    NotBijection { len: usize, n: usize },
    #[error("invalid grade {0}: grades are rationals p/q in [0, 1]")]
    InvalidGrade(String),
    #[error("grade set must contain {0}")]
    GradeSetMissing(&'static str),
    #[error("{what} exceeds the resource ceiling ({detail}); raise it with POGS_CEILING or force the run")]
    CeilingExceeded { what: &'static str, detail: String },
    #[error("cannot start worker pool: {0}")]
    WorkerPool(String),
    #[error("structure is invalid: {0}")]
    Invalid(Witness),
}

pub type Result<T> = std::result::Result<T, Error>;
