use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial contexts differ: {0} vs {1}")]
    ContextMismatch(String, String),
    #[error("exact division failed: divisor does not divide dividend")]
    NotDivisible,
    #[error("variable degree {degree} exceeds weight {weight}")]
    DegreeExceedsWeight { degree: u32, weight: u32 },
    #[error("exponent overflow: a variable degree would exceed {0}")]
    ExponentOverflow(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported format version {0}")]
    UnsupportedVersion(String),
    #[error("top degree of the last variable is {found}, expected {expected}")]
    UnexpectedTopDegree { found: u32, expected: u32 },
    #[error("polynomial is not translation invariant")]
    NotTranslationInvariant,
    #[error("reconstruction does not reproduce its input")]
    ReconstructionMismatch,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not a pure tensor of the two variable blocks")]
    NotPureTensor,
    #[error("valuation {nu} exceeds the bound {bound}")]
    ValuationViolation { nu: u32, bound: u32 },
    #[error("resource budget exceeded: {what} reached {terms} terms (limit {limit})")]
    ResourceBudgetExceeded {
        what: String,
        terms: usize,
        limit: usize,
    },
    #[error("exponent 4*{count}/2^{dim} is not an integer")]
    ExponentNotIntegral { count: u32, dim: u32 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
