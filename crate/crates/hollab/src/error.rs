use thiserror::Error;

/// Recoverable failures: bad parameters or blown enumeration budgets.
///
/// Contract violations (mixed moduli, malformed shapes) are programming
/// errors and panic instead.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported modulus: {0}")]
    UnsupportedModulus(String),

    #[error("too large: {0}")]
    BudgetExceeded(String),

    #[error("no closed-form table for these parameters: {0}")]
    NoClosedForm(String),

    #[error("integrality failure: {0}")]
    Integrality(String),

    #[error("differential does not square to zero at {0}")]
    NotAComplex(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("unknown suite name: {0}")]
    UnknownSuite(String),

    #[error("cross-check mismatch: {0}")]
    Mismatch(String),

    #[error("rewriting did not terminate: {0}")]
    NonTerminatingRewrite(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
