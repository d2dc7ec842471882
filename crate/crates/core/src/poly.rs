//! Dense univariate polynomials in ξ over [`ExactScalar`] and the generator
//! of the barrier polynomials `H±_n`.
//!
//! `H±_n` is defined by the closed form `(∓i)ⁿ e^{∓iξ²} dⁿ/dξⁿ e^{±iξ²}`.
//! [`hermite_ppb`] builds it by the first-order recurrence
//! `H±_{n+1} = 2ξ·H±_n ∓ i·(H±_n)'`, which follows from one differentiation of
//! the closed form; [`hermite_ppb_rodrigues`] evaluates the closed form
//! directly by iterated symbolic differentiation, serving as the independent
//! route the recurrence is checked against.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::ExactScalar;
use crate::Sign;

/// Dense polynomial; `coeffs[k]` is the coefficient of ξ^k.
/// Trailing zeros are trimmed, so the zero polynomial has an empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyC {
    coeffs: Vec<ExactScalar>,
}

impl PolyC {
    pub fn zero() -> Self {
        PolyC { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyC::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        PolyC::from_coeffs(vec![c])
    }

    /// `c·ξ^k`.
    pub fn monomial(k: usize, c: ExactScalar) -> Self {
        let mut coeffs = vec![ExactScalar::zero(); k];
        coeffs.push(c);
        PolyC::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(ExactScalar::is_zero) {
            coeffs.pop();
        }
        PolyC { coeffs }
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// Coefficient of ξ^k, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> ExactScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    /// d/dξ.
    pub fn differentiate(&self) -> PolyC {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| &ExactScalar::from_integer(k as i64) * c)
            .collect();
        PolyC::from_coeffs(coeffs)
    }

    /// ξ ↦ -ξ: negates odd-degree coefficients.
    pub fn reflect(&self) -> PolyC {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        PolyC::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &ExactScalar) -> PolyC {
        PolyC::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by ξ.
    pub fn mul_xi(&self) -> PolyC {
        if self.is_zero() {
            return PolyC::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ExactScalar::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        PolyC::from_coeffs(coeffs)
    }

    /// Complex-conjugate every coefficient.
    pub fn conjugate_coeffs(&self) -> PolyC {
        PolyC::from_coeffs(self.coeffs.iter().map(ExactScalar::conjugate).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// CSV with header `degree,a_re,a_im,b_re,b_im`, one row per coefficient.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,a_re,a_im,b_re,b_im\n");
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                k,
                c.a_re(),
                c.a_im(),
                c.b_re(),
                c.b_im()
            ));
        }
        out
    }

    /// LaTeX form in descending powers, e.g. `8\xi^{3} - 12i\xi`.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => "\\xi".into(),
                _ => format!("\\xi^{{{k}}}"),
            };
            // A coefficient renders bare when it is a single additive term.
            let atomic = {
                let parts = [!c.a_re().is_zero(), !c.a_im().is_zero(), !c.b.is_zero()];
                parts.iter().filter(|p| **p).count() == 1 && c.b_im().is_zero()
            };
            let term = if k > 0 && c.is_one() {
                power
            } else if k > 0 && *c == -ExactScalar::one() {
                format!("-{power}")
            } else if atomic {
                format!("{}{}", c.latex(), power)
            } else {
                format!("\\left({}\\right){}", c.latex(), power)
            };
            terms.push(term);
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(stripped) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}

impl Add for &PolyC {
    type Output = PolyC;
    fn add(self, rhs: &PolyC) -> PolyC {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        PolyC::from_coeffs(coeffs)
    }
}

impl Sub for &PolyC {
    type Output = PolyC;
    fn sub(self, rhs: &PolyC) -> PolyC {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        PolyC::from_coeffs(coeffs)
    }
}

impl Mul for &PolyC {
    type Output = PolyC;
    fn mul(self, rhs: &PolyC) -> PolyC {
        if self.is_zero() || rhs.is_zero() {
            return PolyC::zero();
        }
        let mut coeffs = vec![ExactScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        PolyC::from_coeffs(coeffs)
    }
}

impl Neg for &PolyC {
    type Output = PolyC;
    fn neg(self) -> PolyC {
        PolyC::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_value_ops {
    ($($op:ident :: $method:ident),*) => {$(
        impl $op for PolyC {
            type Output = PolyC;
            fn $method(self, rhs: PolyC) -> PolyC {
                (&self).$method(&rhs)
            }
        }
        impl $op<&PolyC> for PolyC {
            type Output = PolyC;
            fn $method(self, rhs: &PolyC) -> PolyC {
                (&self).$method(rhs)
            }
        }
        impl $op<PolyC> for &PolyC {
            type Output = PolyC;
            fn $method(self, rhs: PolyC) -> PolyC {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for PolyC {
    type Output = PolyC;
    fn neg(self) -> PolyC {
        -&self
    }
}

impl Serialize for PolyC {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyC {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(PolyC::from_coeffs(Vec::deserialize(deserializer)?))
    }
}

/// Derivative of `P(ξ)·e^{i·rate·ξ²/2}` carried on the polynomial part:
/// `P ↦ P' + i·rate·ξ·P`. Shared by the phase-family derivative and the
/// iterated-derivative construction below.
pub(crate) fn phase_derivative(p: &PolyC, rate: &BigRational) -> PolyC {
    let i_rate = ExactScalar::imaginary(rate.clone());
    &p.differentiate() + &p.mul_xi().scale(&i_rate)
}

/// Single sign flips injected into the recurrence for suite-sensitivity checks.
#[derive(Clone, Copy, Default)]
pub(crate) struct RecurrenceTweak {
    pub flip_xi: bool,
    pub flip_deriv: bool,
}

pub(crate) fn hermite_ppb_tweaked(sign: Sign, n: usize, tweak: RecurrenceTweak) -> PolyC {
    let two_xi = {
        let c = if tweak.flip_xi {
            ExactScalar::from_integer(-2)
        } else {
            ExactScalar::from_integer(2)
        };
        PolyC::monomial(1, c)
    };
    let mut deriv_factor = match sign {
        Sign::Plus => -ExactScalar::i(),
        Sign::Minus => ExactScalar::i(),
    };
    if tweak.flip_deriv {
        deriv_factor = -deriv_factor;
    }
    let mut h = PolyC::one();
    for _ in 0..n {
        h = &(&two_xi * &h) + &h.differentiate().scale(&deriv_factor);
    }
    h
}

/// The barrier polynomial `H±_n` by the recurrence
/// `H±_0 = 1, H±_{n+1} = 2ξ·H±_n ∓ i·(H±_n)'`.
/// All coefficients are Gaussian integers.
pub fn hermite_ppb(sign: Sign, n: usize) -> PolyC {
    hermite_ppb_tweaked(sign, n, RecurrenceTweak::default())
}

/// The barrier polynomial `H±_n` by the closed form
/// `(∓i)ⁿ e^{∓iξ²} dⁿ/dξⁿ e^{±iξ²}`: the n-fold derivative is carried
/// symbolically in the family `Q(ξ)e^{±iξ²}` (phase rate ±2), then the phase
/// is stripped and the prefactor applied.
pub fn hermite_ppb_rodrigues(sign: Sign, n: usize) -> PolyC {
    let rate = match sign {
        Sign::Plus => BigRational::from_integer(2.into()),
        Sign::Minus => BigRational::from_integer((-2).into()),
    };
    let mut q = PolyC::one();
    for _ in 0..n {
        q = phase_derivative(&q, &rate);
    }
    let prefactor = match sign {
        Sign::Plus => -ExactScalar::i(),
        Sign::Minus => ExactScalar::i(),
    };
    q.scale(&prefactor.pow(n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss(re: i64, im: i64) -> ExactScalar {
        &ExactScalar::from_integer(re) + &(&ExactScalar::from_integer(im) * &ExactScalar::i())
    }

    #[test]
    fn differentiate_linear() {
        let p = PolyC::monomial(1, ExactScalar::from_integer(2));
        assert_eq!(p.differentiate(), PolyC::constant(ExactScalar::from_integer(2)));
        assert_eq!(PolyC::zero().differentiate(), PolyC::zero());
    }

    #[test]
    fn reflect_even_polynomial_fixed() {
        // 4ξ² - 2i is even.
        let p = PolyC::from_coeffs(vec![
            gauss(0, -2),
            ExactScalar::zero(),
            ExactScalar::from_integer(4),
        ]);
        assert_eq!(p.reflect(), p);
        let q = PolyC::monomial(1, ExactScalar::one());
        assert_eq!(q.reflect(), -&q);
    }

    #[test]
    fn mul_monomials() {
        let p = PolyC::monomial(1, ExactScalar::from_integer(2));
        assert_eq!(&p * &p, PolyC::monomial(2, ExactScalar::from_integer(4)));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = PolyC::from_coeffs(vec![ExactScalar::one(), ExactScalar::zero()]);
        assert_eq!(p.degree(), Some(0));
        let q = &PolyC::monomial(2, ExactScalar::one()) - &PolyC::monomial(2, ExactScalar::one());
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn hermite_small_cases() {
        assert_eq!(hermite_ppb(Sign::Plus, 0), PolyC::one());
        assert_eq!(
            hermite_ppb(Sign::Plus, 1),
            PolyC::monomial(1, ExactScalar::from_integer(2))
        );
        // H+_2 = 4ξ² - 2i, H-_2 = 4ξ² + 2i.
        let expect_plus = PolyC::from_coeffs(vec![
            gauss(0, -2),
            ExactScalar::zero(),
            ExactScalar::from_integer(4),
        ]);
        assert_eq!(hermite_ppb(Sign::Plus, 2), expect_plus);
        assert_eq!(
            hermite_ppb(Sign::Minus, 2),
            expect_plus.conjugate_coeffs()
        );
        // H+_3 = 8ξ³ - 12iξ.
        let expect_3 = PolyC::from_coeffs(vec![
            ExactScalar::zero(),
            gauss(0, -12),
            ExactScalar::zero(),
            ExactScalar::from_integer(8),
        ]);
        assert_eq!(hermite_ppb(Sign::Plus, 3), expect_3);
    }

    #[test]
    fn rodrigues_small_cases() {
        assert_eq!(hermite_ppb_rodrigues(Sign::Plus, 0), PolyC::one());
        assert_eq!(
            hermite_ppb_rodrigues(Sign::Minus, 1),
            PolyC::monomial(1, ExactScalar::from_integer(2))
        );
        assert_eq!(
            hermite_ppb_rodrigues(Sign::Plus, 3),
            hermite_ppb(Sign::Plus, 3)
        );
    }

    #[test]
    fn recurrence_matches_rodrigues_up_to_ten() {
        for sign in [Sign::Plus, Sign::Minus] {
            for n in 0..=10 {
                assert_eq!(
                    hermite_ppb(sign, n),
                    hermite_ppb_rodrigues(sign, n),
                    "H{}_{n} disagrees between routes",
                    sign.symbol()
                );
            }
        }
    }

    #[test]
    fn hermite_structure() {
        for sign in [Sign::Plus, Sign::Minus] {
            for n in 0..=10usize {
                let h = hermite_ppb(sign, n);
                assert_eq!(h.degree(), Some(n));
                assert_eq!(
                    h.leading_coeff().unwrap(),
                    &ExactScalar::from_integer(2).pow(n as u32)
                );
                // Parity (-1)^n and Gaussian-integer coefficients.
                let reflected = h.reflect();
                if n % 2 == 0 {
                    assert_eq!(reflected, h);
                } else {
                    assert_eq!(reflected, -&h);
                }
                assert!(h.coeffs().iter().all(ExactScalar::is_gaussian_integer));
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        for n in 0..=10 {
            assert_eq!(
                hermite_ppb(Sign::Minus, n),
                hermite_ppb(Sign::Plus, n).conjugate_coeffs()
            );
        }
    }

    #[test]
    fn eval_horner() {
        // (4ξ² - 2i) at ξ = 1+i: 4(1+i)² - 2i = 8i - 2i = 6i.
        let p = hermite_ppb(Sign::Plus, 2);
        assert_eq!(p.eval(&gauss(1, 1)), gauss(0, 6));
    }

    #[test]
    fn csv_and_latex_output() {
        let h2 = hermite_ppb(Sign::Plus, 2);
        assert_eq!(
            h2.to_csv(),
            "degree,a_re,a_im,b_re,b_im\n0,0,-2,0,0\n1,0,0,0,0\n2,4,0,0,0\n"
        );
        assert_eq!(h2.latex(), "4\\xi^{2} - 2i");
        assert_eq!(hermite_ppb(Sign::Plus, 3).latex(), "8\\xi^{3} - 12i\\xi");
        assert_eq!(PolyC::zero().latex(), "0");
    }

    #[test]
    fn json_is_coefficient_list() {
        let p = PolyC::monomial(1, ExactScalar::from_integer(2));
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with('['));
        let back: PolyC = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
