use thiserror::Error;

/// Errors surfaced by ideal arithmetic, decomposition, transforms, and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("exponent arithmetic overflowed 64 bits")]
    ExponentOverflow,
    #[error("{0} requires a nonzero ideal")]
    ZeroIdeal(&'static str),
    #[error("{0} requires a proper ideal")]
    UnitIdeal(&'static str),
    #[error("colon by the zero ideal is undefined")]
    ColonByZero,
    #[error("enumeration needs {needed} points but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("operation is defined only for squarefree ideals")]
    NotSquarefree,
    #[error("expansion tuple has {got} entries but the ring has {expected} variables")]
    TupleLengthMismatch { expected: usize, got: usize },
    #[error("no weight given for variable {0}")]
    UnweightedVariable(String),
    #[error("variable {0} is not a shadow of any base variable")]
    UnmappedShadow(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("variable {0} is not in the ring")]
    UnknownVariable(String),
    #[error("{0} is not a subset of the ring variables")]
    InvalidPrime(String),
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("graph has {vertices} vertices; enumeration budget is {budget}")]
    GraphTooLarge { vertices: usize, budget: usize },
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("at power {power}: {source}")]
    AtPower {
        power: u64,
        #[source]
        source: Box<Error>,
    },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
