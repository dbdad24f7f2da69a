use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("window too wide: c - 2n(c - 1 - log c) = {denominator} <= 0 at c = {c}, n = {n}")]
    WindowTooWide { c: f64, n: u32, denominator: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("sieve capacity exceeded: need {needed}, limit is {limit}")]
    Capacity { needed: u64, limit: u64 },

    #[error("empty scan: {0}")]
    EmptyScan(String),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("polynomial is reducible: {0}")]
    Reducible(String),

    #[error("irreducibility could not be certified for degree {0}")]
    Uncertified(usize),

    #[error("splitting unavailable at p = {0} (possible index divisor)")]
    SplittingUnavailable(u64),

    #[error("field discriminant not certified; supply it explicitly")]
    UnverifiedDiscriminant,

    #[error("unsupported ideal representation: {0}")]
    UnsupportedRepresentation(String),

    #[error("invalid discriminant {0}: not fundamental")]
    NotFundamental(i64),

    #[error("no bound certified below 4 log^2 Delta")]
    NoBoundCertified,

    #[error("prime cache: {0}")]
    Cache(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
