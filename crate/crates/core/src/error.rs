use thiserror::Error;

/// Errors raised by dimension validation, set construction, the iterative
/// procedures, and the exact solver.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {0} out of range (valid: 1..={max})", max = crate::Dimension::MAX)]
    InvalidDimension(u32),

    #[error("construction step would reach dimension {0}, above the limit {max}", max = crate::Dimension::MAX)]
    DimensionOverflow(u32),

    #[error("input set is empty")]
    EmptySet,

    #[error("vertex {bits:#b} has bits set at or above dimension {dim}")]
    VertexOutOfRange { bits: u64, dim: u32 },

    #[error("duplicate vertex {bits:#b}")]
    DuplicateVertex { bits: u64 },

    #[error("no embedded seed set for dimension {0} (seeds cover 1..=6)")]
    NoSeed(u32),

    #[error("exact solver supports dimensions 1..=7, got {0}")]
    UnsupportedSolveDimension(u32),

    #[error("time budget must be positive")]
    ZeroBudget,
}
