use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: n = {n} exceeds the bound {bound}; {hint}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
        hint: &'static str,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid block word: {0}")]
    InvalidWord(String),
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("{0} is not a layered or reverse layered matching")]
    NotAMatching(String),
    #[error("substitution image must be a single monomial, got {0} terms")]
    ImageNotMonomial(usize),
    #[error("substitution produced a negative exponent on {0}")]
    NegativeExponent(&'static str),
    #[error("q-image is not invertible but the polynomial has negative q-exponents")]
    NonInvertibleImage,
    #[error("division by zero: q = 0 with a negative q-exponent present")]
    DivisionByZero,
    #[error("polynomial parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("family {0} has no recursion")]
    NoRecursion(&'static str),
    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),
    #[error("n = {n} is outside the domain of {what}")]
    OutOfDomain { what: &'static str, n: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
