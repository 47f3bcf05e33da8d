use thiserror::Error;

/// Errors raised by precondition violations. All arithmetic itself is total.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial indices must be strictly increasing and >= 1, got {0:?}")]
    InvalidMonomial(Vec<u32>),

    #[error("partition parts must be weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("partition has {parts} nonzero parts, more than the arity {arity}")]
    TooManyParts { parts: usize, arity: usize },

    #[error("a Grassmannian context requires 1 <= k <= n, got k={k}, n={n}")]
    InvalidContext { k: usize, n: u32 },

    #[error("element of grade {found:?} where grade {expected} is required")]
    GradeMismatch {
        expected: usize,
        found: Option<usize>,
    },

    #[error("monomial index {index} exceeds the ambient rank n={n}")]
    IndexOutOfBox { index: u32, n: u32 },

    #[error("partition {parts:?} does not fit the {rows}x{cols} box")]
    PartitionOutOfBox {
        parts: Vec<u32>,
        rows: usize,
        cols: u32,
    },

    #[error("operator index h={h} exceeds n={n}; the quantum action is defined for h <= n")]
    DegreeAboveRank { h: u32, n: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
