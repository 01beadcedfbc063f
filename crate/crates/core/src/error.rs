use thiserror::Error;

/// Validation, precondition, and resource-limit failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} appears more than once")]
    DuplicatePoint { point: u32 },

    #[error("point {point} is outside 1..={max}")]
    PointOutOfRange { point: u32, max: u32 },

    #[error("expected {expected} chords, got {got}")]
    WrongChordCount { expected: usize, got: usize },

    #[error("chords ({},{}) and ({},{}) share point {point}", a.0, a.1, b.0, b.1)]
    OverlappingChords {
        a: (u32, u32),
        b: (u32, u32),
        point: u32,
    },

    #[error("operation is undefined on the empty diagram")]
    EmptyDiagram,

    #[error("mark ({},{}) is not a chord of the diagram", mark.0, mark.1)]
    MarkNotInDiagram { mark: (u32, u32) },

    #[error("mark ({},{}) has length {length}, expected 1", mark.0, mark.1)]
    MarkNotShort { mark: (u32, u32), length: u32 },

    #[error("diagram has {actual} short chords, caller claimed {claimed}")]
    ShortChordMismatch { claimed: u32, actual: u32 },

    #[error("map is undefined on diagrams with exactly one short chord")]
    SingleShortChord,

    #[error("chords ({},{}) and ({},{}) nest", outer.0, outer.1, inner.0, inner.1)]
    NestingPair {
        outer: (u32, u32),
        inner: (u32, u32),
    },

    #[error("invalid path: {reason}")]
    InvalidDyckPath { reason: String },

    #[error("series has nonzero constant term")]
    NonzeroConstantTerm,

    #[error("coefficient of t^{index} times {index}! is not an integer")]
    NonIntegerCoefficient { index: usize },

    #[error("sequence is empty")]
    EmptySequence,

    #[error("row {n} is below the first row {min} of this triangle")]
    RowOutOfRange { n: u32, min: u32 },

    #[error("column {k} is outside {lo}..={hi} in row {n}")]
    ColumnOutOfRange { n: u32, k: u32, lo: u32, hi: u32 },

    #[error("n={n} exceeds the enumeration cap {cap}")]
    ResourceCap { n: u32, cap: u32 },

    #[error("cannot split a stream that has already been consumed")]
    StreamConsumed,

    #[error("parts must be at least 1")]
    ZeroParts,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown {what} {name:?}, expected one of {expected}")]
    Unknown {
        what: &'static str,
        name: String,
        expected: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
