//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("colon divisor must be a nonzero ideal")]
    ZeroColonDivisor,

    #[error("the zero polynomial generates no monomial ideal")]
    ZeroPolynomial,

    #[error("ideal is not m-primary: variable {variable} has no pure power among the generators; Rees valuations are computed here only for m-primary ideals (value semigroup must be archimedean)")]
    NotMPrimary { variable: usize },

    #[error("unsupported ambient dimension {dim}: exact facet enumeration is limited to dimension {max}")]
    UnsupportedDimension { dim: usize, max: usize },

    #[error("budget exceeded: {what} = {requested} is over the limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("valuation weights must be strictly positive rationals (weight {index} is not)")]
    NonPositiveWeight { index: usize },

    #[error("a valuation needs at least one variable")]
    EmptyWeights,

    #[error("ideal is not squarefree: generator exponents must all be 0 or 1")]
    NotSquarefree,

    #[error("ideal must be proper and nonzero")]
    ImproperIdeal,

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
