use thiserror::Error;

/// Precondition failures shared by the arithmetic, diagram and criterion layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial is not accepted here")]
    ZeroPolynomial,
    #[error("polynomial has degree {degree}, at least 1 is required")]
    DegreeTooSmall { degree: usize },
    #[error("constant term is zero; strip the x^m factor first")]
    ZeroConstantTerm,
    #[error("{0} is not a valid prime")]
    InvalidPrime(u64),
    #[error("exponent k must be a positive integer, got {0}")]
    InvalidExponent(u32),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}
