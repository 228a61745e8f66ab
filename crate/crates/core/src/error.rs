use thiserror::Error;

/// Errors raised by field, group and character computations.
///
/// Configuration problems (bad `q`, budget overflow) are distinguished from
/// verification failures, which always indicate a bug or a false claim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("q must be odd (got characteristic {0})")]
    EvenCharacteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("{what} exceeds budget: {size} > {limit}")]
    Budget {
        what: &'static str,
        size: u64,
        limit: u64,
    },
    #[error("zero is neither a square nor a non-square")]
    ZeroSquareTest,
    #[error("element is not a unit")]
    NotUnit,
    #[error("cyclotomic context mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    ContextMismatch { left: u32, right: u32 },
    #[error("value is not a rational integer: {0}")]
    NotInteger(String),
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("unknown subgroup name `{0}`")]
    UnknownSubgroup(String),
    #[error("conductor {m} has no primitive {p}-th root of unity")]
    MissingRoot { m: u32, p: u32 },
    #[error("no prime l = 1 mod {exponent} found below {bound}")]
    NoDixonPrime { exponent: u32, bound: u64 },
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Shorthand for a verification failure.
pub(crate) fn verify_fail(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}
