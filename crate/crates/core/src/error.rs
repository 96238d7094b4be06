use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime greater than 3 and below 2^63")]
    InvalidPrime(u64),
    #[error("p = {p} does not satisfy {requirement}")]
    UnsupportedPrime { p: u64, requirement: &'static str },
    #[error("division by zero modulo {0}")]
    DivisionByZero(u64),
    #[error("cubic residue symbol of zero is undefined")]
    ZeroArgument,
    #[error("singular curve: discriminant vanishes modulo {0}")]
    SingularCurve(u64),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is in the kernel (x = 0) or at infinity")]
    KernelPoint,
    #[error("{d} is not a nonzero square modulo {p}")]
    NotASquare { p: u64, d: u64 },
    #[error("character sum is not a rational integer: buckets ({a}, {b}, {c})")]
    NonIntegralSum { a: i128, b: i128, c: i128 },
    #[error("{what}: expected {expected}, got {actual} at p = {p}")]
    IdentityViolation {
        what: &'static str,
        p: u64,
        expected: i128,
        actual: i128,
    },
    #[error("no rational isomorphism from the isogeny codomain back to the curve at p = {0}")]
    NoRationalIsomorphism(u64),
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error("unknown {kind} method `{name}` (known: {known})")]
    UnknownMethod {
        kind: &'static str,
        name: String,
        known: String,
    },
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error("report I/O: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;
