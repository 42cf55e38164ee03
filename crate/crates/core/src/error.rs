use thiserror::Error;

/// Precondition failures raised by the arithmetic, entropy and ideal layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("n must be at least 1, got 0")]
    Zero,
    #[error("{what} requires n >= {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: u64,
        got: u64,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime powers must be listed in strictly ascending prime order")]
    Unsorted,
    #[error("exponents must be at least 1")]
    ZeroExponent,
    #[error("value exceeds the 64-bit range")]
    Overflow,
    #[error("omega mismatch: {left} distinct primes vs {right}")]
    OmegaMismatch { left: usize, right: usize },
    #[error("inputs are not coprime")]
    NotCoprime,
    #[error("k must be at least 2, got {0}")]
    KTooSmall(u64),
    #[error("factorization is not {0}-free")]
    NotKFree(u64),
    #[error("alpha ({alpha}) must be at least beta ({beta})")]
    AlphaBelowBeta { alpha: u64, beta: u64 },
    #[error("weights must be in (0, 1] and sum to 1 (sum = {0})")]
    InvalidDistribution(f64),
    #[error("invalid field parameter d = {0}: must be squarefree and not 0 or 1")]
    InvalidField(i64),
    #[error("ideal factorization is empty")]
    EmptyIdeal,
    #[error("duplicate prime ideal label ({p}, {conjugate})")]
    DuplicateLabel { p: u64, conjugate: u32 },
    #[error("length mismatch: {0}")]
    LengthMismatch(&'static str),
    #[error("pairing must be a permutation of 0..{0}")]
    InvalidPairing(usize),
    #[error("invalid scan configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("unknown property id {0:?}")]
    UnknownProperty(String),
}

pub type Result<T> = std::result::Result<T, Error>;
