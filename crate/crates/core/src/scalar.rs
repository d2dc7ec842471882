//! Exact arithmetic in the field ℚ(i, √2).
//!
//! Every coefficient produced by the ladder construction lives in this field:
//! starting from the constant 1, the only irrationality introduced is the 1/√2
//! of the normal coordinates, and the only non-real unit is i. An element is
//! stored as `a + b·√2` with `a, b ∈ ℚ(i)`, each a pair of big rationals, so
//! values have one canonical representation and equality is bit-exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// Parse a rational literal: `"p/q"`, or plain `"p"` meaning `p/1`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::BadRational(s.to_string());
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

/// An element of ℚ(i): rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::new(BigRational::one(), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conjugate(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`, the squared modulus; zero iff the element is zero.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, by rationalizing with the complex conjugate.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

/// An element of ℚ(i, √2), stored as `a + b·√2` with `a, b ∈ ℚ(i)`.
///
/// The four underlying rationals are kept in lowest terms with positive
/// denominator (the rational type guarantees this), so two equal values always
/// have identical representations and `==` decides exact equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactScalar {
    /// The ℚ(i) part.
    pub a: GaussianRational,
    /// The coefficient of √2.
    pub b: GaussianRational,
}

impl ExactScalar {
    pub fn new(a: GaussianRational, b: GaussianRational) -> Self {
        ExactScalar { a, b }
    }

    pub fn from_parts(
        a_re: BigRational,
        a_im: BigRational,
        b_re: BigRational,
        b_im: BigRational,
    ) -> Self {
        ExactScalar::new(
            GaussianRational::new(a_re, a_im),
            GaussianRational::new(b_re, b_im),
        )
    }

    pub fn zero() -> Self {
        ExactScalar::new(GaussianRational::zero(), GaussianRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar::new(GaussianRational::one(), GaussianRational::zero())
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        ExactScalar::from_parts(
            BigRational::zero(),
            BigRational::one(),
            BigRational::zero(),
            BigRational::zero(),
        )
    }

    /// √2.
    pub fn sqrt2() -> Self {
        ExactScalar::new(GaussianRational::zero(), GaussianRational::one())
    }

    /// 1/√2, stored as (1/2)·√2.
    pub fn inv_sqrt2() -> Self {
        ExactScalar::from_parts(
            BigRational::zero(),
            BigRational::zero(),
            BigRational::new(1.into(), 2.into()),
            BigRational::zero(),
        )
    }

    pub fn from_integer(n: i64) -> Self {
        ExactScalar::rational(BigRational::from_integer(n.into()))
    }

    /// `p/q` as a real rational scalar. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        ExactScalar::rational(BigRational::new(p.into(), q.into()))
    }

    pub fn rational(r: BigRational) -> Self {
        ExactScalar::new(
            GaussianRational::new(r, BigRational::zero()),
            GaussianRational::zero(),
        )
    }

    /// `r·i` for rational `r`.
    pub fn imaginary(r: BigRational) -> Self {
        ExactScalar::new(
            GaussianRational::new(BigRational::zero(), r),
            GaussianRational::zero(),
        )
    }

    pub fn a_re(&self) -> &BigRational {
        &self.a.re
    }

    pub fn a_im(&self) -> &BigRational {
        &self.a.im
    }

    pub fn b_re(&self) -> &BigRational {
        &self.b.re
    }

    pub fn b_im(&self) -> &BigRational {
        &self.b.im
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == ExactScalar::one()
    }

    /// True when the value is `p + qi` with integer `p, q` (no √2 part).
    pub fn is_gaussian_integer(&self) -> bool {
        self.b.is_zero() && self.a.re.is_integer() && self.a.im.is_integer()
    }

    /// Complex conjugation: `i ↦ -i` on both components, √2 fixed.
    pub fn conjugate(&self) -> Self {
        ExactScalar::new(self.a.conjugate(), self.b.conjugate())
    }

    /// Exact inverse. Rationalizes first over the √2-conjugate, then over the
    /// complex conjugate:
    /// `1/(a + b√2) = (a - b√2)/(a² - 2b²)` with `a² - 2b² ∈ ℚ(i)`.
    pub fn inverse(&self) -> Result<Self> {
        let two = GaussianRational::new(BigRational::from_integer(2.into()), BigRational::zero());
        let denom = &(&self.a * &self.a) - &(&two * &(&self.b * &self.b));
        // a² = 2b² with a, b ∈ ℚ(i) forces a = b = 0, since √2 ∉ ℚ(i).
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let denom_inv = denom.inverse()?;
        Ok(ExactScalar::new(
            &self.a * &denom_inv,
            &(-&self.b) * &denom_inv,
        ))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = ExactScalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Render as LaTeX, e.g. `-\tfrac{3}{2} + 2i + \left(1 - i\right)\sqrt{2}`.
    pub fn latex(&self) -> String {
        fn rat(r: &BigRational) -> String {
            if r.is_integer() {
                r.numer().to_string()
            } else if r.is_negative() {
                format!("-\\tfrac{{{}}}{{{}}}", -r.numer(), r.denom())
            } else {
                format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
            }
        }
        // One additive term per nonzero component, joined with explicit signs.
        let mut terms: Vec<String> = Vec::new();
        if !self.a.re.is_zero() {
            terms.push(rat(&self.a.re));
        }
        if !self.a.im.is_zero() {
            if self.a.im == BigRational::one() {
                terms.push("i".into());
            } else if self.a.im == -BigRational::one() {
                terms.push("-i".into());
            } else {
                terms.push(format!("{}i", rat(&self.a.im)));
            }
        }
        if !self.b.is_zero() {
            if self.b == GaussianRational::one() {
                terms.push("\\sqrt{2}".into());
            } else if self.b.im.is_zero() {
                terms.push(format!("{}\\sqrt{{2}}", rat(&self.b.re)));
            } else {
                let inner = ExactScalar::new(self.b.clone(), GaussianRational::zero());
                terms.push(format!("\\left({}\\right)\\sqrt{{2}}", inner.latex()));
            }
        }
        if terms.is_empty() {
            return "0".into();
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

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        // (a₁ + b₁√2)(a₂ + b₂√2) = (a₁a₂ + 2b₁b₂) + (a₁b₂ + b₁a₂)√2
        let two = GaussianRational::new(BigRational::from_integer(2.into()), BigRational::zero());
        ExactScalar::new(
            &(&self.a * &rhs.a) + &(&two * &(&self.b * &rhs.b)),
            &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        )
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_value_ops {
    ($($op:ident :: $method:ident),*) => {$(
        impl $op for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl $op<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
        impl $op<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn gaussian_term(g: &GaussianRational) -> Vec<String> {
            let mut v = Vec::new();
            if !g.re.is_zero() {
                v.push(g.re.to_string());
            }
            if !g.im.is_zero() {
                if g.im == BigRational::one() {
                    v.push("i".into());
                } else if g.im == -BigRational::one() {
                    v.push("-i".into());
                } else {
                    v.push(format!("{}i", g.im));
                }
            }
            v
        }
        let mut terms = gaussian_term(&self.a);
        if !self.b.is_zero() {
            if self.b == GaussianRational::one() {
                terms.push("sqrt2".into());
            } else {
                let inner = gaussian_term(&self.b);
                if inner.len() == 1 && !inner[0].contains('/') {
                    terms.push(format!("{}*sqrt2", inner[0]));
                } else {
                    terms.push(format!("({})*sqrt2", inner.join(" + ").replace("+ -", "- ")));
                }
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
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
        write!(f, "{out}")
    }
}

/// Wire form: four rational strings in fixed key order.
#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    a_re: String,
    a_im: String,
    b_re: String,
    b_im: String,
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr {
            a_re: self.a.re.to_string(),
            a_im: self.a.im.to_string(),
            b_re: self.b.re.to_string(),
            b_im: self.b.im.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let parse = |s: &str| parse_rational(s).map_err(D::Error::custom);
        Ok(ExactScalar::from_parts(
            parse(&repr.a_re)?,
            parse(&repr.a_im)?,
            parse(&repr.b_re)?,
            parse(&repr.b_im)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_componentwise() {
        let one = ExactScalar::one();
        let s2 = ExactScalar::sqrt2();
        let sum = &one + &s2;
        assert_eq!(sum, ExactScalar::from_parts(1.into(), 0.into(), 1.into(), 0.into()));
    }

    #[test]
    fn add_identity() {
        let x = ExactScalar::from_parts(
            BigRational::new(3.into(), 7.into()),
            BigRational::new((-2).into(), 5.into()),
            1.into(),
            BigRational::new(9.into(), 4.into()),
        );
        assert_eq!(&x + &ExactScalar::zero(), x);
    }

    #[test]
    fn add_half_i_twice() {
        let half_i = ExactScalar::imaginary(BigRational::new(1.into(), 2.into()));
        assert_eq!(&half_i + &half_i, ExactScalar::i());
    }

    #[test]
    fn mul_defining_relations() {
        assert_eq!(
            &ExactScalar::sqrt2() * &ExactScalar::sqrt2(),
            ExactScalar::from_integer(2)
        );
        assert_eq!(&ExactScalar::i() * &ExactScalar::i(), -ExactScalar::one());
    }

    #[test]
    fn inv_sqrt2_times_sqrt2_is_one() {
        // (1/2)·√2·√2 = 1, the rational arithmetic oracle for the stored form.
        let product = &ExactScalar::inv_sqrt2() * &ExactScalar::sqrt2();
        assert!(product.is_one());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            ExactScalar::from_integer(2).inverse().unwrap(),
            ExactScalar::ratio(1, 2)
        );
        assert_eq!(ExactScalar::i().inverse().unwrap(), -ExactScalar::i());

        // 1/(1 + √2) = -1 + √2, checked by multiplying back.
        let x = &ExactScalar::one() + &ExactScalar::sqrt2();
        let inv = x.inverse().unwrap();
        assert_eq!(inv, ExactScalar::from_parts((-1).into(), 0.into(), 1.into(), 0.into()));
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(ExactScalar::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(ExactScalar::i().conjugate(), -ExactScalar::i());
        let real = &ExactScalar::from_integer(3)
            + &(&ExactScalar::from_integer(2) * &ExactScalar::sqrt2());
        assert_eq!(real.conjugate(), real);
        let x = ExactScalar::from_parts(
            BigRational::new(1.into(), 3.into()),
            2.into(),
            (-1).into(),
            BigRational::new(5.into(), 2.into()),
        );
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn canonical_form_is_reduced() {
        let x = ExactScalar::rational(BigRational::new(2.into(), 4.into()));
        assert_eq!(x.a_re().numer(), &BigInt::from(1));
        assert_eq!(x.a_re().denom(), &BigInt::from(2));
        let y = &x + &x;
        assert_eq!(y.a_re().numer(), &BigInt::from(1));
        assert_eq!(y.a_re().denom(), &BigInt::from(1));
    }

    #[test]
    fn json_round_trip_and_key_order() {
        let x = ExactScalar::from_parts(
            BigRational::new(1.into(), 2.into()),
            (-3).into(),
            0.into(),
            BigRational::new(7.into(), 5.into()),
        );
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"{"a_re":"1/2","a_im":"-3","b_re":"0","b_im":"7/5"}"#
        );
        let back: ExactScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn parse_rational_accepts_bare_integer() {
        assert_eq!(parse_rational("5").unwrap(), BigRational::from_integer(5.into()));
        assert_eq!(parse_rational("-4/6").unwrap(), BigRational::new((-2).into(), 3.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(ExactScalar::zero().to_string(), "0");
        assert_eq!(ExactScalar::i().to_string(), "i");
        assert_eq!((-ExactScalar::i()).to_string(), "-i");
        assert_eq!(ExactScalar::inv_sqrt2().to_string(), "1/2*sqrt2");
        let x = &ExactScalar::from_integer(2) - &ExactScalar::i();
        assert_eq!(x.to_string(), "2 - i");
    }

    #[test]
    fn latex_rendering() {
        assert_eq!(ExactScalar::ratio(-3, 2).latex(), "-\\tfrac{3}{2}");
        assert_eq!(ExactScalar::sqrt2().latex(), "\\sqrt{2}");
        let x = &ExactScalar::from_integer(4) - &(&ExactScalar::i() * &ExactScalar::from_integer(2));
        assert_eq!(x.latex(), "4 - 2i");
    }
}
