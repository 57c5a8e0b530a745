//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty poset")]
    EmptyPoset,
    #[error("duplicate element identifier `{0}`")]
    DuplicateIdentifier(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("invalid covers: {0}")]
    InvalidCovers(String),
    #[error("labeling does not match the cover set: {0}")]
    LabelingMismatch(String),
    #[error("poset is not consistent with its labeling")]
    NotConsistent,
    #[error("poset is not parity-consistent")]
    NotParityConsistent,
    #[error("poset is not 1-graded")]
    NotOneGraded,
    #[error("rank values must lie in {{0,1}}")]
    RankOutOfParityRange,
    #[error("identifier clash in ordinal sum: `{0}`")]
    IdentifierClash(String),
    #[error("group is not a subgroup of Aut(P, eps)")]
    NotASubgroupOfAut,
    #[error("quotient relation is not a partial order")]
    QuotientNotPartialOrder,
    #[error("permutation is not an automorphism of the labeled poset")]
    NotAnAutomorphism,
    #[error("group too large: |G| = {0}")]
    GroupTooLarge(usize),
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("partitions have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("class function is not a virtual character: multiplicity {0} is not an integer")]
    NotVirtual(String),
    #[error("virtual character is not effective: {0}")]
    NotEffective(String),
    #[error("truncation unstable: nonzero coefficient at degree {0}")]
    TruncationUnstable(usize),
    #[error("max_dilate {given} is below the required minimum {required}")]
    InsufficientMaxDilate { given: usize, required: usize },
    #[error("polytope is unbounded in coordinate {0}")]
    Unbounded(usize),
    #[error("group does not preserve the polytope")]
    GroupDoesNotPreserve,
    #[error("polynomial is not palindromic of degree {0}")]
    NotPalindromic(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("block-gap shift is not an integer: {0}")]
    NonIntegralShift(String),
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
