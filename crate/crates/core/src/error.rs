//! Error type shared by all modules.

use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Multiplicative inverse of the zero scalar.
    #[error("division by zero in the scalar field")]
    DivisionByZero,

    /// Ladder operators are only defined on the phase-rate family r ∈ {0, ±1}.
    #[error("ladder operator applied to unsupported phase rate {0}")]
    UnsupportedPhaseRate(BigRational),

    /// Sums of family members are only defined at a common phase rate.
    #[error("cannot combine functions with phase rates {0} and {1}")]
    PhaseRateMismatch(BigRational, BigRational),

    /// Proportionality against the zero function is undefined.
    #[error("proportionality base is the zero function")]
    ZeroProportionalityBase,

    /// Evolution parameter λ = e^{γt} must be positive.
    #[error("evolution parameter lambda must be positive, got {0}")]
    NonpositiveLambda(BigRational),

    /// Exact eigenvalue extraction is only supported for triangular matrices.
    #[error("matrix is not triangular; exact eigenvalue extraction unsupported")]
    NotTriangular,

    /// The finite-difference stencil needs at least three nodes.
    #[error("grid has {0} points, need at least 3")]
    TooFewPoints(usize),

    /// Grid bounds must satisfy xmin < xmax and be finite.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Malformed rational literal such as "1/0" or "x/2".
    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    /// A sign label other than "+" or "-".
    #[error("invalid sign {0:?}, expected \"+\" or \"-\"")]
    BadSign(String),

    /// Operator-expression syntax error; `offset` is a byte position in the input.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}
