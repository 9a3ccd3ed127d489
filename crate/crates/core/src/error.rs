use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrayError {
    #[error("array dimensions must be positive, got {rows}x{cols}")]
    ZeroDimension { rows: usize, cols: usize },
    #[error("row {row} has {found} cells, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("cell ({row}, {col}) outside a {rows}x{cols} array")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("cell ({row}, {col}) would hold 0, which is not a legal entry")]
    ZeroEntry { row: usize, col: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unsupported format version {0:?}")]
    UnsupportedVersion(String),
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed header")]
    BadHeader { line: usize },
    #[error("line {line}: bad token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: 0 is not a legal entry (use '.' for an empty cell)")]
    ZeroEntry { line: usize },
    #[error("line {line}: expected {expected} tokens, found {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error(transparent)]
    Array(#[from] ArrayError),
}

/// Integer overflow while accumulating partial sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow accumulating partial sums")]
pub struct Overflow;

/// Failures while generating an array from its row formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("no construction for k={k}, n={n}: {reason}")]
    OutOfRange { n: usize, k: usize, reason: String },
    #[error("row {row}: index outside 1..={n}")]
    RowIndex { row: i64, n: usize },
    #[error("row {row} defined twice")]
    RowTwice { row: usize },
    #[error("row {row} never defined")]
    RowMissing { row: usize },
    #[error("row {row}: negative gap length {len}")]
    NegativeGap { row: usize, len: i64 },
    #[error("row {row}: {found} cells, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("row {row}: entry 0")]
    ZeroEntry { row: usize },
    #[error("array is not cyclically diagonal")]
    NotDiagonal,
    #[error("{family} array for n={n}, k={k} is only {classification}; the formulas should give GloballySimpleStar")]
    Inconsistent {
        n: usize,
        k: usize,
        family: &'static str,
        classification: crate::verify::Classification,
    },
}
