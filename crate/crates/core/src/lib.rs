//! Exact ladder-operator algebra for the one-dimensional parabolic potential
//! barrier (the inverted harmonic oscillator `V(x) = -mγ²x²/2`).
//!
//! The barrier Hamiltonian is diagonalized by the normal coordinates
//! `b± = (ξ ∓ i d/dξ)/√2`, whose repeated action on the pure Gaussian phases
//! `e^{±iξ²/2}` generates two families of non-normalizable eigenfunctions with
//! complex eigenvalues `∓i(n + 1/2)` (in units of ħγ, with ħ = m = γ = 1).
//! Everything here is computed in the exact coefficient field ℚ(i, √2), so
//! operator identities are checked by equality, not by tolerance.
//!
//! Module map:
//! - [`scalar`]: the coefficient field ℚ(i, √2) over big rationals.
//! - [`poly`]: dense polynomials over the field and the barrier polynomials
//!   `H±_n`, built both by recurrence and by iterated derivative.
//! - [`states`]: the closed family `P(ξ)e^{irξ²/2}`, the ladder, number and
//!   Hamiltonian operators, and the parity / time-reversal symmetries.
//! - [`heisenberg`]: exact hyperbolic evolution of linear observables in
//!   `x̂, p̂`, parameterized by `λ = e^{γt}`.
//! - [`fermionic`]: the 2×2 anticommutation-relation analogue with twofold
//!   complex spectrum `{i/2, -i/2}`.
//! - [`numeric`]: floating-point cross-check of the eigenvalue relation by
//!   finite differences on a grid.
//! - [`expr`]: a small operator-expression language (`"b+ b+ u+0"`).
//! - [`verify`]: the machine-readable verification suite used by the CLI.

pub mod error;
pub mod expr;
pub mod fermionic;
pub mod heisenberg;
pub mod numeric;
pub mod poly;
pub mod scalar;
pub mod states;
pub mod verify;

pub use error::Error;
pub use scalar::ExactScalar;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

/// Result alias for fallible toolkit operations.
pub type Result<T> = std::result::Result<T, Error>;

/// The ± label shared by the ladder operators, the standard states and the
/// barrier polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The opposite label.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1` as a rational.
    pub fn unit_rational(self) -> BigRational {
        match self {
            Sign::Plus => BigRational::from_integer(1.into()),
            Sign::Minus => BigRational::from_integer((-1).into()),
        }
    }

    /// `+1` or `-1` as an [`ExactScalar`].
    pub fn unit_scalar(self) -> ExactScalar {
        match self {
            Sign::Plus => ExactScalar::one(),
            Sign::Minus => -ExactScalar::one(),
        }
    }

    /// `+1.0` or `-1.0`.
    pub fn unit_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(Error::BadSign(other.to_string())),
        }
    }
}
