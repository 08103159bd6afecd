//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by constructors and composition operations.
///
/// Every precondition named by an operation maps to one of these variants;
/// the messages carry enough context to reconstruct the offending call.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("label {0} is not in the ground set {1}")]
    LabelNotInSet(String, String),

    #[error("sets must be disjoint: {0} and {1} overlap")]
    Overlap(String, String),

    #[error("ground sets differ: {0} vs {1}")]
    GroundSetMismatch(String, String),

    #[error("{0} does not refine {1}")]
    NotARefinement(String, String),

    #[error("not a partition of the blocks of {0}: {1}")]
    NotABlockPartition(String, String),

    #[error("invalid {kind}: {reason}")]
    Invalid { kind: &'static str, reason: String },

    #[error("structure on the empty set is not allowed here")]
    EmptyGround,

    #[error("malformed nesting: {0}")]
    MalformedNesting(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("map is not multilinear: {0}")]
    NotMultilinear(String),

    #[error("no failures in a passing report")]
    NoFailures,

    #[error("unknown structure or target: {0}")]
    UnknownStructure(String),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(kind: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid { kind, reason: reason.into() }
    }
}
