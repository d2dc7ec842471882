//! The closed function family `P(ξ)·e^{irξ²/2}` and the operator algebra on it.
//!
//! Members with phase rate r = +1 and r = -1 are the two eigenfunction
//! families of the barrier Hamiltonian: the standard states `u±_0 = e^{±iξ²/2}`
//! are annihilated by the opposite-sign ladder operator, and the nth states
//! are their repeated ladder images, `u±_n ∝ H±_n(ξ)e^{±iξ²/2}`. These are
//! representatives of non-normalizable generalized functions; the toolkit
//! manipulates the representatives only, so no inner product or normalization
//! integral appears anywhere, and the dual-space extension of the operators
//! needs no separate object (it acts on representatives exactly as the
//! operator itself does).
//!
//! A single `PhasePolyFunction` carries one phase rate: superpositions across
//! different rates (e.g. `u+_0 + u-_0`) are outside the type by design — use a
//! list of members if such a combination is ever needed.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::poly::{self, PolyC};
use crate::scalar::{parse_rational, ExactScalar};
use crate::{Result, Sign};

/// `P(ξ)·e^{i·r·ξ²/2}` with exact rational phase rate `r`.
///
/// Canonical form: the zero function has an empty polynomial and `r = 0`;
/// every constructor restores this, so `==` is exact equality of functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePolyFunction {
    phase_rate: BigRational,
    poly: PolyC,
}

impl PhasePolyFunction {
    pub fn new(phase_rate: BigRational, poly: PolyC) -> Self {
        if poly.is_zero() {
            PhasePolyFunction::zero()
        } else {
            PhasePolyFunction { phase_rate, poly }
        }
    }

    pub fn zero() -> Self {
        PhasePolyFunction {
            phase_rate: BigRational::zero(),
            poly: PolyC::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn phase_rate(&self) -> &BigRational {
        &self.phase_rate
    }

    pub fn poly(&self) -> &PolyC {
        &self.poly
    }

    /// d/dξ on the family: `(r, P) ↦ (r, P' + i·r·ξ·P)`.
    pub fn differentiate(&self) -> Self {
        PhasePolyFunction::new(
            self.phase_rate.clone(),
            poly::phase_derivative(&self.poly, &self.phase_rate),
        )
    }

    /// Multiply by the pure phase `e^{i·delta·ξ²/2}`: shifts the rate only.
    pub fn shift_phase_rate(&self, delta: &BigRational) -> Self {
        PhasePolyFunction::new(&self.phase_rate + delta, self.poly.clone())
    }

    /// Multiply by ξ.
    pub fn mul_xi(&self) -> Self {
        PhasePolyFunction::new(self.phase_rate.clone(), self.poly.mul_xi())
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        PhasePolyFunction::new(self.phase_rate.clone(), self.poly.scale(c))
    }

    /// Sum of two members; defined only at a common phase rate
    /// (the zero function combines with anything).
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.phase_rate != rhs.phase_rate {
            return Err(Error::PhaseRateMismatch(
                self.phase_rate.clone(),
                rhs.phase_rate.clone(),
            ));
        }
        Ok(PhasePolyFunction::new(
            self.phase_rate.clone(),
            &self.poly + &rhs.poly,
        ))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.scale(&-ExactScalar::one()))
    }
}

impl std::fmt::Display for PhasePolyFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let coeffs: Vec<String> = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*xi"),
                _ => format!("({c})*xi^{k}"),
            })
            .collect();
        write!(
            f,
            "[{}] * exp(i*({})*xi^2/2)",
            coeffs.join(" + "),
            self.phase_rate
        )
    }
}

/// Wire form: `{ "phase_rate": "p/q", "coeffs": [scalar, ...] }`.
#[derive(Serialize, Deserialize)]
struct FunctionRepr {
    phase_rate: String,
    coeffs: PolyC,
}

impl Serialize for PhasePolyFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FunctionRepr {
            phase_rate: self.phase_rate.to_string(),
            coeffs: self.poly.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PhasePolyFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FunctionRepr::deserialize(deserializer)?;
        let rate = parse_rational(&repr.phase_rate).map_err(serde::de::Error::custom)?;
        Ok(PhasePolyFunction::new(rate, repr.coeffs))
    }
}

/// Eigenvalue report: `eigenvalue` is present exactly when the probed
/// function is an eigenfunction.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport {
    eigenvalue: Option<ExactScalar>,
}

impl EigenReport {
    pub fn is_eigen(&self) -> bool {
        self.eigenvalue.is_some()
    }

    pub fn eigenvalue(&self) -> Option<&ExactScalar> {
        self.eigenvalue.as_ref()
    }
}

/// Which operator [`eigen_check`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    Number,
    Hamiltonian,
}

/// The standard state `u±_0 = e^{±iξ²/2}` (unit coefficient convention).
pub fn standard_state(sign: Sign) -> PhasePolyFunction {
    PhasePolyFunction::new(sign.unit_rational(), PolyC::one())
}

/// Single sign flips injected into the ladder formula for suite-sensitivity
/// checks; the default is the true operator.
#[derive(Clone, Copy, Default)]
pub(crate) struct LadderTweak {
    pub flip_xi: bool,
    pub flip_deriv: bool,
    pub flip_scale: bool,
}

pub(crate) fn apply_ladder_tweaked(
    sign: Sign,
    f: &PhasePolyFunction,
    tweak: LadderTweak,
) -> Result<PhasePolyFunction> {
    if f.is_zero() {
        return Ok(PhasePolyFunction::zero());
    }
    let r = &f.phase_rate;
    if !r.is_zero() && *r != BigRational::one() && *r != -BigRational::one() {
        return Err(Error::UnsupportedPhaseRate(r.clone()));
    }
    // b± = (1/√2)(ξ ∓ i d/dξ), applied termwise on the family.
    let xi_term = if tweak.flip_xi {
        -f.poly.mul_xi()
    } else {
        f.poly.mul_xi()
    };
    let mut deriv_factor = match sign {
        Sign::Plus => -ExactScalar::i(),
        Sign::Minus => ExactScalar::i(),
    };
    if tweak.flip_deriv {
        deriv_factor = -deriv_factor;
    }
    let deriv_term = poly::phase_derivative(&f.poly, r).scale(&deriv_factor);
    let mut scale = ExactScalar::inv_sqrt2();
    if tweak.flip_scale {
        scale = -scale;
    }
    Ok(PhasePolyFunction::new(
        r.clone(),
        (&xi_term + &deriv_term).scale(&scale),
    ))
}

/// Apply the ladder operator `b± = (1/√2)(ξ ∓ i d/dξ)`.
///
/// Defined on the eigenfamily `|r| ∈ {0, 1}`; on it the phase rate is
/// preserved and the polynomial maps to `(1/√2)((1 ± r)ξP ∓ iP')`.
pub fn apply_ladder(sign: Sign, f: &PhasePolyFunction) -> Result<PhasePolyFunction> {
    apply_ladder_tweaked(sign, f, LadderTweak::default())
}

pub(crate) fn apply_number_tweaked(
    f: &PhasePolyFunction,
    tweak: LadderTweak,
) -> Result<PhasePolyFunction> {
    let plus_minus = apply_ladder_tweaked(Sign::Plus, &apply_ladder_tweaked(Sign::Minus, f, tweak)?, tweak)?;
    let minus_plus = apply_ladder_tweaked(Sign::Minus, &apply_ladder_tweaked(Sign::Plus, f, tweak)?, tweak)?;
    Ok(plus_minus.add(&minus_plus)?.scale(&ExactScalar::ratio(1, 2)))
}

/// Apply the number operator `N = (b⁺b⁻ + b⁻b⁺)/2` by ladder composition.
pub fn apply_number(f: &PhasePolyFunction) -> Result<PhasePolyFunction> {
    apply_number_tweaked(f, LadderTweak::default())
}

/// Apply the Hamiltonian `H = -N` (in units of ħγ).
pub fn apply_hamiltonian(f: &PhasePolyFunction) -> Result<PhasePolyFunction> {
    Ok(apply_number(f)?.scale(&-ExactScalar::one()))
}

pub(crate) fn nth_state_ladder_tweaked(
    sign: Sign,
    n: usize,
    tweak: LadderTweak,
) -> PhasePolyFunction {
    let mut state = standard_state(sign);
    for _ in 0..n {
        state = apply_ladder_tweaked(sign, &state, tweak)
            .expect("ladder closed on the eigenfamily");
    }
    state
}

/// The nth state built by the ladder: `(b±)ⁿ u±_0`.
pub fn nth_state_ladder(sign: Sign, n: usize) -> PhasePolyFunction {
    nth_state_ladder_tweaked(sign, n, LadderTweak::default())
}

/// The nth state built from the barrier polynomial: `H±_n(ξ)·e^{±iξ²/2}`
/// (unit coefficient convention). Proportional to [`nth_state_ladder`]
/// with exact ratio `(1/√2)ⁿ`.
pub fn nth_state_poly(sign: Sign, n: usize) -> PhasePolyFunction {
    PhasePolyFunction::new(sign.unit_rational(), poly::hermite_ppb(sign, n))
}

/// Exact scalar `c` with `f = c·g`, when it exists.
///
/// Returns `Ok(None)` when no such scalar exists (different phase rates or
/// non-matching polynomials); `f = 0` yields `Some(0)`. Errors when `g` is
/// the zero function.
pub fn proportionality_scalar(
    f: &PhasePolyFunction,
    g: &PhasePolyFunction,
) -> Result<Option<ExactScalar>> {
    if g.is_zero() {
        return Err(Error::ZeroProportionalityBase);
    }
    if f.is_zero() {
        return Ok(Some(ExactScalar::zero()));
    }
    if f.phase_rate != g.phase_rate || f.poly.degree() != g.poly.degree() {
        return Ok(None);
    }
    let candidate = &f.poly.coeff(f.poly.degree().unwrap())
        * &g.poly
            .leading_coeff()
            .expect("nonzero polynomial")
            .inverse()
            .expect("leading coefficient nonzero");
    if f.poly == g.poly.scale(&candidate) {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

/// Apply `op` to a nonzero `f` and report whether `f` is an exact
/// eigenfunction, with its eigenvalue.
pub fn eigen_check(f: &PhasePolyFunction, op: OperatorKind) -> Result<EigenReport> {
    let image = match op {
        OperatorKind::Number => apply_number(f)?,
        OperatorKind::Hamiltonian => apply_hamiltonian(f)?,
    };
    Ok(EigenReport {
        eigenvalue: proportionality_scalar(&image, f)?,
    })
}

/// Space inversion ξ ↦ -ξ. The Gaussian phase is even, so only the
/// polynomial reflects; `u±_n` are eigenstates with parity (-1)ⁿ.
pub fn parity(f: &PhasePolyFunction) -> PhasePolyFunction {
    PhasePolyFunction::new(f.phase_rate.clone(), f.poly.reflect())
}

/// Antiunitary time reversal: complex conjugation of the representative.
/// Negates the phase rate and conjugates every coefficient, so it swaps
/// `u+_n ↔ u-_n` under the unit coefficient convention.
pub fn time_reverse(f: &PhasePolyFunction) -> PhasePolyFunction {
    PhasePolyFunction::new(-f.phase_rate.clone(), f.poly.conjugate_coeffs())
}

/// Check `[b∓, (b±)ⁿ] = ±in(b±)ⁿ⁻¹` by applying both sides to `probe`.
///
/// `n` must be positive.
pub fn commutator_identity_check(
    n: usize,
    sign: Sign,
    probe: &PhasePolyFunction,
) -> Result<bool> {
    assert!(n >= 1, "the identity is stated for positive n");
    let repeated = |f: &PhasePolyFunction, times: usize| -> Result<PhasePolyFunction> {
        let mut acc = f.clone();
        for _ in 0..times {
            acc = apply_ladder(sign, &acc)?;
        }
        Ok(acc)
    };
    let lhs = apply_ladder(sign.flip(), &repeated(probe, n)?)?
        .sub(&repeated(&apply_ladder(sign.flip(), probe)?, n)?)?;
    let factor = &sign.unit_scalar() * &(&ExactScalar::i() * &ExactScalar::from_integer(n as i64));
    let rhs = repeated(probe, n - 1)?.scale(&factor);
    Ok(lhs == rhs)
}
