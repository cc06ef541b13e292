use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("polynomials over F_{0} and F_{1} cannot be combined")]
    ModulusMismatch(u64, u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("operation requires a monic polynomial")]
    NotMonic,
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("lift product is not congruent to the polynomial mod {0}")]
    NotCongruent(u64),
    #[error("polynomial has the rational root {0}")]
    Reducible(String),
    #[error("{0} divides the index of the polynomial's root; factor in the maximal order instead")]
    IndexDivisible(u64),
    #[error("elements or ideals belong to different orders")]
    OrderMismatch,
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("coordinate vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("generators do not span a full-rank lattice")]
    RankDeficient,
    #[error("{0}")]
    BoundExceeded(String),
    #[error("order is not {0}-maximal")]
    NotPMaximal(u64),
    #[error("ideal is not a maximal ideal of the order")]
    NotPrimeIdeal,
    #[error("parameters have a common divisor {0}")]
    CommonDivisor(String),
    #[error("not enough distinct prime functions mod {0} for the requested degrees")]
    InfeasibleSupply(u64),
    #[error("prime function {index} has degree {got}, expected {expected}")]
    DegreeMismatch { index: usize, expected: usize, got: usize },
    #[error("{0} is not a monic irreducible polynomial")]
    NotIrreducible(String),
    #[error("polynomial has zero discriminant")]
    ZeroDiscriminant,
    #[error("rank {0} exceeds the supported bound")]
    RankTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
