use thiserror::Error;

use crate::exact::ExactInt;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("composition parts must be positive; part {index} is zero")]
    ZeroPart { index: usize },

    #[error("operation needs a nonempty composition")]
    EmptyComposition,

    #[error("operation needs a nonempty tableau")]
    EmptyTableau,

    #[error("malformed tableau: {0}")]
    TableauShape(String),

    #[error("label {label} is not below the bound {bound}")]
    LabelOutOfRange { label: usize, bound: usize },

    #[error("label {label} is already present in the first row")]
    DuplicateLabel { label: usize },

    #[error("shape part {part} exceeds bound {bound} + 1; no labeling exists")]
    ShapeTooWide { part: usize, bound: usize },

    #[error("lattice sequence needs at least 2 entries, got {len}")]
    SequenceTooShort { len: usize },

    #[error("lattice sequence must start at 0, got {first}")]
    SequenceStart { first: i64 },

    #[error("lattice sequence decreases at index {index}")]
    SequenceDecreasing { index: usize },

    #[error("slice [{lo}, {hi}] is out of range for a sequence of length {len}")]
    SliceOutOfRange { lo: usize, hi: usize, len: usize },

    #[error("eta {eta} exceeds the sequence width {width}")]
    EtaOutOfRange { eta: usize, width: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid labeled lattice sequence: {0}")]
    PairInvariant(String),

    #[error("universe of {size} elements exceeds the enumeration budget of {budget}")]
    BudgetExceeded { size: ExactInt, budget: u64 },
}
