use std::io;

use thiserror::Error;

use crate::plane::{Direction, Point};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1, got {0}")]
    InvalidDegree(u32),
    #[error("field {p}^{k} exceeds the supported cardinality cap of 2^20")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element code {code} is out of range for a field with {q} elements")]
    ElementOutOfRange { code: u64, q: u32 },
    #[error("operands belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("{d} does not divide {n}")]
    NotDivisor { d: u64, n: u64 },
    #[error("the zero vector has no direction")]
    ZeroVector,
    #[error("a line through two points needs distinct points, got {0} twice")]
    EqualPoints(Point),
    #[error("operation needs a nonempty set")]
    EmptySet,
    #[error("set has {size} points but needs more than q = {q}")]
    BelowThreshold { size: usize, q: u32 },
    #[error("no direction determined by F has second moment below 2|E|^2/q")]
    NoQualifyingDirection,
    #[error("direction {0} not determined by E - E")]
    DirectionNotDetermined(Direction),
    #[error("set is not symmetric under negation")]
    AsymmetricSet,
    #[error("set of size {size} is not larger than sqrt(q) for q = {q}")]
    SetTooSmall { size: usize, q: u32 },
    #[error("iterated sumset needs at least one summand")]
    ZeroSummands,
    #[error("duplicate point {point} on line {line}")]
    DuplicatePoint { point: Point, line: usize },
    #[error("sample of {n} points requested from a plane of {cells} points")]
    SampleTooLarge { n: u64, cells: u64 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid campaign config: {0}")]
    InvalidConfig(String),
    #[error("internal check failed: {0}")]
    Violation(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
