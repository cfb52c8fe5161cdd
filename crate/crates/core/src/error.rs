use thiserror::Error;

/// Which row of a two-row tableau an error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Row {
    First,
    Second,
}

impl std::fmt::Display for Row {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Row::First => f.write_str("row1"),
            Row::Second => f.write_str("row2"),
        }
    }
}

/// Errors raised by validation, parsing and the counting/enumeration engines.
///
/// Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("FirstLetterNotOne: a code must start with 1")]
    FirstLetterNotOne,
    #[error("GrowthViolation at position {0}: letter exceeds previous letter + 1")]
    GrowthViolation(usize),
    #[error("NonPositiveLetter at position {0}")]
    NonPositiveLetter(usize),

    #[error("PrefixViolation at position {0}: more Down than Up letters")]
    PrefixViolation(usize),
    #[error("Unbalanced: {0:+} excess Up letters")]
    Unbalanced(i64),

    #[error("ShapeMismatch: rows have lengths {0} and {1}")]
    ShapeMismatch(usize, usize),
    #[error("NotIncreasing in {0} at position {1}")]
    NotIncreasing(Row, usize),
    #[error("ColumnViolation at position {0}")]
    ColumnViolation(usize),
    #[error("ContentNotPermutationOf1To2n")]
    ContentNotPermutationOf1To2n,

    #[error("NotAPermutation: {0}")]
    NotAPermutation(String),
    #[error("NotAvoiding: permutation contains an increasing subsequence of length 3")]
    NotAvoiding,
    #[error("NegativeReserve at position {0}")]
    NegativeReserve(usize),
    #[error("TrajectoryStart: a trajectory must start at 0")]
    TrajectoryStart,

    #[error("EmptyCode")]
    EmptyCode,
    #[error("EmptyWord")]
    EmptyWord,

    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("ShapeNotWeaklyDecreasing: ({0}, {1})")]
    ShapeNotWeaklyDecreasing(u64, u64),
    #[error("RankOutOfRange: rank {rank} is not below {count}")]
    RankOutOfRange { rank: String, count: String },
    #[error("ResourceLimit: {0}")]
    ResourceLimit(String),
    #[error("TooLargeForOracle: n = {0} exceeds the factorial filter bound")]
    TooLargeForOracle(usize),

    #[error("CodecViolation: {0}")]
    CodecViolation(String),
    #[error("UnknownFormat: {0}")]
    UnknownFormat(String),
    #[error("UnknownFamily: {0}")]
    UnknownFamily(String),
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by resource or size limits rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit(_) | Error::TooLargeForOracle(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
