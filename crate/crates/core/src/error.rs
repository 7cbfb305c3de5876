use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("the prime must be odd")]
    EvenPrime,
    #[error("niveau must be at least 1")]
    ZeroNiveau,
    #[error("l^{niveau} - 1 does not fit in 64 bits for l = {l}")]
    ModulusOverflow { l: u64, niveau: u32 },
    #[error("types over different primes ({0} and {1})")]
    PrimeMismatch(u64, u64),
    #[error("weight entries must be non-increasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("empty weight")]
    EmptyWeight,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("residue degree must be at least 1")]
    ZeroResidueDegree,
    #[error("operation only defined for residue degree 1, got {0}")]
    ResidueDegreeUnsupported(u32),
    #[error("not a permutation of 0..{0}: {1:?}")]
    BadPermutation(usize, Vec<usize>),
    #[error("composition parts must be positive, got {0:?}")]
    BadComposition(Vec<usize>),
    #[error("place `{0}` has no partner in the global weight")]
    UnpairedPlace(String),
    #[error("global weight violates conjugate duality")]
    DualityViolation,
    #[error("no inertial type supplied for place `{0}`")]
    MissingPlace(String),
    #[error("weight {0:?} is outside the region where the companion weight is defined")]
    CompanionPrecondition(Vec<i64>),
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("malformed weight `{0}`")]
    MalformedWeight(String),
}

pub type Result<T> = std::result::Result<T, Error>;
