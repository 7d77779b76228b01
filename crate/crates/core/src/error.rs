use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("unknown root-system family `{0}`")]
    UnknownFamily(String),

    #[error("{0:?} is not a root")]
    NotARoot(Vec<i32>),

    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("vector has length {got}, expected rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("multiplicity profile is not Weyl-invariant: {0}")]
    NotWeylInvariant(String),

    #[error("multiplicities must be positive")]
    ZeroMultiplicity,

    #[error("characteristic element must have at least one positive coefficient")]
    ZeroCharacteristic,

    #[error("root {root:?} has level {level}; the operation needs a positive level")]
    NonPositiveLevel { root: Vec<i32>, level: i64 },

    #[error("layer index {m} outside 1..={kind}")]
    LayerOutOfRange { m: u32, kind: u32 },

    #[error("Cartan vector must be nonzero")]
    ZeroVector,

    #[error("ad_H on the nilradical is not positive: {0}")]
    NotPositive(String),

    #[error("extension constant c must be positive")]
    NonPositiveConstant,

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("catalog schema error: {0}")]
    Schema(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("duplicate algebra name `{0}`")]
    DuplicateName(String),

    #[error("invalid block partition: {0}")]
    InvalidBlocks(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
