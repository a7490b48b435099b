use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds 2^16")]
    FieldTooLarge(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u32 },
    #[error("no canonical modulus for F_{p}^{m}; supply one")]
    NoCanonicalModulus { p: u32, m: u32 },
    #[error("element {value} is out of range for a field of order {q}")]
    ElementOutOfRange { value: u64, q: u32 },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field of order {q} is not the quadratic extension of F_{base_q}")]
    NotAQuadraticExtension { q: u32, base_q: u32 },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("generator matrix spans the zero code")]
    ZeroCode,
    #[error("hermitian form needs a field of square order, got {q}")]
    HermitianNeedsSquareOrder { q: u32 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("scaling word has a zero at position {position}; pass allow-degenerate to permit it")]
    ZeroScalarNotAllowed { position: usize },
    #[error("degenerate scaling dropped the rank from {expected} to {got}")]
    RankDropped { expected: usize, got: usize },
    #[error("enumeration needs {needed} messages, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("{0}")]
    FieldTooSmall(String),
    #[error("minor search would evaluate more than {budget} determinants")]
    SearchBudgetExceeded { budget: u128 },
    #[error("code is already LCD (hull dimension 0)")]
    AlreadyLcd,
    #[error("code is not Ker(L) + Hull(C)")]
    DecompositionViolated,

    #[error("{0} is outside the domain")]
    OutOfDomain(String),
    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
