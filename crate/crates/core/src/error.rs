use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing positive integers")]
    NotAPartition,
    #[error("sizes differ: {0} vs {1}")]
    SizeMismatch(u64, u64),
    #[error("subtraction goes negative at part index {0}")]
    NotSubtractable(usize),
    #[error("part {0} is not divisible by {1}")]
    NotDivisible(u32, u32),
    #[error("node ({0},{1}) lies outside the diagram")]
    NodeOutsideDiagram(usize, usize),
    #[error("p-adic valuation of 0 is undefined")]
    ZeroInput,
    #[error("{0} beads cannot display a partition with {1} parts")]
    TooFewBeads(usize, usize),
    #[error("runner index {0} must lie in 1..={1}")]
    BadRunnerIndex(u32, u32),
    #[error("partition is not {0}-regular")]
    NotRegular(u32),
    #[error("partition is not {0}-restricted")]
    NotRestricted(u32),
    #[error("expansion component {0} is not restricted")]
    InvalidExpansion(usize),
    #[error("partition is not a {0}-core")]
    NotACore(u32),
    #[error("partition is not a JM-partition for p = {0}")]
    NotJm(u32),
    #[error("swapping runners {0}-1 and {0} is not legal on this display")]
    SwapNotLegal(u32),
    #[error("no chain into a Rouquier block found within the search bound")]
    ChainNotFoundWithinBound,
    #[error("Specht module is not simple")]
    NotSimple,
    #[error("{0} is not an odd prime")]
    UnsupportedPrime(u32),
    #[error("size {0} exceeds the enumeration cap {1}")]
    SizeCapExceeded(u64, u64),
}

pub type Result<T> = std::result::Result<T, Error>;
