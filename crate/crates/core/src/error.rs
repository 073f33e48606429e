use thiserror::Error;

/// Errors raised by the combinatorial and algebraic routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed text: {0}")]
    MalformedText(String),
    #[error("parts are not weakly decreasing: {0}")]
    NotWeaklyDecreasing(String),
    #[error("runner count e must be at least 2, got {0}")]
    BadE(usize),
    #[error("partitions have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("operation needs a nonempty partition")]
    EmptyPartition,
    #[error("{beads} beads cannot display a partition with {parts} parts")]
    TooFewBeads { beads: usize, parts: usize },
    #[error("only {available} normal nodes of residue {residue}, asked for {wanted}")]
    NotEnoughNormalNodes { residue: usize, available: usize, wanted: usize },
    #[error("only {available} conormal nodes of residue {residue}, asked for {wanted}")]
    NotEnoughConormalNodes { residue: usize, available: usize, wanted: usize },
    #[error("runner precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("partition {0} is not {1}-regular")]
    NotERegular(String, usize),
    #[error("canonical basis vector G({mu}) has coefficient {coeff} at {lambda}")]
    NonPositiveCoefficient { mu: String, lambda: String, coeff: String },
    #[error("inexact division of {0} by {1}")]
    InexactDivision(String, String),
    #[error("no runner can be deleted from both displays")]
    NoEligibleRunner,
    #[error("Fdot_{residue} is undefined on {partition}")]
    DotFUndefined { residue: usize, partition: String },
    #[error("partition {0} does not lie in either block of the pair")]
    PartitionNotInPair(String),
    #[error("adjustment back-substitution produced a non-integral or negative entry at ({0}, {1})")]
    NonIntegralSolution(String, String),
    #[error("characteristic must be 0 or a prime below 2^31, got {0}")]
    BadCharacteristic(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
