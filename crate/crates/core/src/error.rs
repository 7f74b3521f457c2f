use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field too large: q^2 = {q_squared} exceeds the bound {bound}")]
    TooLarge { q_squared: u128, bound: u64 },
    #[error("element encoding {enc} out of range for a field of size {size}")]
    OutOfRange { enc: u64, size: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("operation requires odd characteristic")]
    RequiresOddQ,
    #[error("operation requires characteristic 2")]
    RequiresEvenQ,
    #[error("{d} does not divide q^2 - 1 = {group_order}")]
    NotDivisor { d: u64, group_order: u64 },
    #[error("{what} must be nonzero")]
    MustBeNonzero { what: &'static str },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("no closed cardinality formula for {0}")]
    NoFormula(String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("the zero polynomial has no reverse")]
    ZeroPolynomial,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("elements belong to different fields")]
    MixedOwners,
}

pub type Result<T> = std::result::Result<T, Error>;
