use thiserror::Error;

use crate::mpart::{Multipartition, NodeRef};

/// Errors raised by the library.
///
/// The algebraic failures (`NotDivisible`, `TriangularityFailure`,
/// `EliminationDivergence`, `CongruenceFailure`, `NotInSpan`) never occur on
/// correct input; when they do, they point at a convention or logic fault and
/// carry enough context to reproduce the instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("size or level mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid residue parameters: {0}")]
    InvalidParams(String),

    #[error("{node} is neither addable nor removable for {lam}")]
    InvalidNode { lam: Multipartition, node: NodeRef },

    #[error("{0} is not a Kleshchev multipartition")]
    NotKleshchev(Multipartition),

    #[error("seed monomial for {label} is not unitriangular: {reason}")]
    TriangularityFailure { label: Multipartition, reason: String },

    #[error("vector is not in the span of the monomial basis: residual at {0}")]
    NotInSpan(Multipartition),

    #[error("elimination for {label} exceeded {bound} corrections")]
    EliminationDivergence { label: Multipartition, bound: usize },

    #[error("canonical basis element {label} fails its final check: {reason}")]
    CongruenceFailure { label: Multipartition, reason: String },

    #[error("decomposition matrix contract violated: {0}")]
    ContractViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
