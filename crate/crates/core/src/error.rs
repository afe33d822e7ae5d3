use thiserror::Error;

/// Errors raised by field, code and Boolean-function operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} outside supported range 1..=20")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} does not have degree {m}")]
    ModulusDegree { m: u32, modulus: u32 },
    #[error("modulus {0:#x} is reducible over GF(2)")]
    ReducibleModulus(u32),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("value {value:#x} is not an element of GF(2^{m})")]
    NotAnElement { m: u32, value: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("elements are linearly dependent over GF(2)")]
    NotABasis,
    #[error("{h} does not divide {m}")]
    NotADivisor { h: u32, m: u32 },
    #[error("element {0:#x} does not lie in the subfield")]
    NotInSubfield(u32),
    #[error("truth table length {len} is not 2^{m}")]
    TableLength { m: u32, len: usize },
    #[error("duplicate element {0:#x} in a set")]
    DuplicateElement(u32),
    #[error("m = {m} exceeds the limit {limit} for this operation")]
    TooLarge { m: u32, limit: u32 },
    #[error("dimension {k} exceeds the enumeration guard {limit}")]
    EnumerationGuard { k: usize, limit: usize },
    #[error("generator matrix is empty")]
    EmptyMatrix,
    #[error("row {row} has length {len}, expected {expected}")]
    RaggedMatrix { row: usize, len: usize, expected: usize },
    #[error("code lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("the zero code has no {0}")]
    ZeroCode(&'static str),
    #[error("defining set is empty")]
    EmptyDefiningSet,
    #[error("Boolean function has empty support")]
    EmptySupport,
    #[error("code is not projective: {0}")]
    NotProjective(String),
    #[error("weight {weight} has multiplicity {count} not divisible by e = {e}")]
    NonIntegralFrequency { weight: i64, count: u64, e: u64 },
    #[error("2n_f + W(w) = {0} is not divisible by 4")]
    NonIntegralWeight(i64),
    #[error("m = {0} is odd; the bivariate view needs m = 2h")]
    OddDegree(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
