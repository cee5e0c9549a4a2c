//! Error type shared by the kernel, enclosures, oracle, catalog and prover.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Interval division where the denominator contains zero.
    #[error("interval division by an interval containing zero")]
    DivisionByZeroInterval,

    /// Argument outside the supported domain of a function or operation.
    #[error("domain error: {0}")]
    DomainError(String),

    /// Split requested on an interval with no representable interior point.
    #[error("cannot split a degenerate interval")]
    DegenerateSplit,

    /// An endpoint overflowed or became NaN; the enclosing proof attempt
    /// must treat the evaluation as inconclusive rather than clamp.
    #[error("non-finite interval endpoint")]
    NonFinite,

    /// Index outside the supported table range (Bernoulli, tanh coefficients, series order).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Expression variable without a binding.
    #[error("unbound variable: {0}")]
    BindingError(String),

    /// gap_order asked at an endpoint that is not flagged degenerate.
    #[error("endpoint is not flagged degenerate for record {0}")]
    NotDegenerate(String),

    /// Catalog lookup with an id that does not exist.
    #[error("unknown inequality id: {0}")]
    UnknownId(String),

    /// Prover configuration violating its invariants for the target domain.
    #[error("invalid prover configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
