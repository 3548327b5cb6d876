use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is singular (det = 0)")]
    Singular,
    #[error("operation is undefined for the 0x0 matrix")]
    EmptyMatrix,
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("index sets differ in size: |Δ1| = {d1}, |Δ2| = {d2}")]
    DeltaSizeMismatch { d1: usize, d2: usize },
    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("dimension {n} exceeds the guard {limit} for dense exact elimination")]
    SizeGuard { n: usize, limit: usize },
    #[error("row {row} of the matrix does not sum to zero")]
    RowSumNonzero { row: usize },
    #[error("column {col} of the matrix does not sum to zero")]
    ColSumNonzero { col: usize },
    #[error("matrix has rank below n-1 (det of the trailing principal minor is 0)")]
    RankDeficient,
    #[error("cannot parse rational from {text:?}")]
    BadRational { text: String },
}
