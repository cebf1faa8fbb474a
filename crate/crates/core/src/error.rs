use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generators do not share one shape: {0}")]
    InconsistentShapes(String),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("matrix is not invertible mod {p}")]
    NotInvertible { p: u32 },
    #[error("image array is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("element is not a member of the group")]
    NotMember,
    #[error("subgroup does not belong to this group")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("representation is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("prime {p} divides the order of an acting element")]
    PrimeDividesOrder { p: u32 },
    #[error("operation requires p = {expected}, got p = {got}")]
    WrongPrime { expected: u32, got: u32 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("search space too large: {reason} (examined {examined} candidates)")]
    SearchSpaceTooLarge { reason: String, examined: usize },
    #[error("case construction failed: {0}")]
    CaseConstruction(String),
    #[error("{0}")]
    Spec(#[from] crate::spec::SpecError),
}

pub type Result<T> = std::result::Result<T, Error>;
