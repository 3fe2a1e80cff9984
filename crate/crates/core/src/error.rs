use thiserror::Error;

use crate::crystal::CrystalError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KrError {
    #[error("rank {rank} out of range for {family} (requires n >= {min})")]
    RankOutOfRange {
        family: &'static str,
        rank: usize,
        min: usize,
    },
    #[error("cannot parse affine type {0:?}; expected e.g. \"A2~1\", \"A4~2\", \"D5~2\"")]
    ParseType(String),
    #[error("node {node} is not in I = {{0..{max}}}")]
    BadNode { node: usize, max: usize },
    #[error("{0} is not in the lattice M~ = sum Z c_i omega_i")]
    NotInExtendedLattice(String),
    #[error("element has nontrivial Sigma-part; factor it first")]
    NontrivialSigma,
    #[error("element is not in the extended affine Weyl group: {0}")]
    NotInExtendedWeyl(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("node {0} is not special")]
    NotSpecial(usize),
    #[error("node {0} is special; expected a nonspecial node")]
    SpecialNode(usize),
    #[error("partition {partition:?} is inadmissible: {reason}")]
    Inadmissible { partition: Vec<usize>, reason: String },
    #[error("crystal operation failed: {0}")]
    Crystal(#[from] CrystalError),
    #[error("generation exceeded the node cap of {0}")]
    CapExceeded(usize),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integrity error: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, KrError>;
