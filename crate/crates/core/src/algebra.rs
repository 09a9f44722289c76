//! Exact rational scalars and dense univariate polynomials over them.
//!
//! Every exact quantity in the crate (moments, cumulants, support endpoints,
//! recurrence coefficients) is a [`BigRational`]. Polynomials are stored
//! densely with the coefficient of `x^k` at index `k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),
}

/// Builds a rational from an integer.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds `num/den` in lowest terms. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Nearest `f64` to an exact rational, correct even when numerator and
/// denominator individually overflow `f64`.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let num = r.numer().abs();
    let den = r.denom().clone();
    // Shift so the integer quotient carries 64 significant bits.
    let shift = den.bits() as i64 - num.bits() as i64 + 64;
    let q = if shift >= 0 { (num << shift as usize) / den } else { num / (den << (-shift) as usize) };
    let mantissa: f64 = q.to_string().parse().unwrap_or(f64::NAN);
    let value = mantissa * 2f64.powi(-shift as i32);
    if r.is_negative() {
        -value
    } else {
        value
    }
}

/// Serde helper: serializes a rational as its exact string.
pub fn serialize_rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

/// Serde helper for sequences of rationals.
pub fn serialize_rationals<S: Serializer>(rs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(rational_string))
}

/// A dense polynomial with exact rational coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DensePolynomial {
    coeffs: Vec<BigRational>,
}

impl DensePolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    /// `c * x^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + rational_to_f64(c))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// True when every nonzero coefficient sits at a degree with the parity
    /// of `parity` (0 = even, 1 = odd).
    pub fn has_parity(&self, parity: usize) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| k % 2 == parity % 2 || c.is_zero())
    }

    /// Exact interpolant through `points` via Newton divided differences.
    ///
    /// The result has degree at most `points.len() - 1`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<Self, AlgebraError> {
        let n = points.len();
        for i in 0..n {
            for j in 0..i {
                if points[i].0 == points[j].0 {
                    return Err(AlgebraError::DuplicateAbscissa(rational_string(&points[i].0)));
                }
            }
        }
        let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
        let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
        for order in 1..n {
            for i in (order..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - order]);
            }
        }
        // Nested form: dd[0] + (x - x0)(dd[1] + (x - x1)(dd[2] + ...)).
        let mut poly = Self::zero();
        for i in (0..n).rev() {
            let linear = Self::new(vec![-xs[i].clone(), BigRational::one()]);
            poly = &(&poly * &linear) + &Self::constant(dd[i].clone());
        }
        Ok(poly)
    }

    /// Renders with a chosen variable name, highest degree first, e.g.
    /// `x^3 - 7/2 x`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let var_part = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&rational_string(&mag));
            } else if mag.is_one() {
                out.push_str(&var_part);
            } else {
                out.push_str(&rational_string(&mag));
                out.push(' ');
                out.push_str(&var_part);
            }
        }
        out
    }
}

impl fmt::Display for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Debug for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePolynomial({})", self.display_with("x"))
    }
}

impl Serialize for DensePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_rationals(&self.coeffs, s)
    }
}

impl Add for &DensePolynomial {
    type Output = DensePolynomial;

    fn add(self, rhs: Self) -> DensePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &DensePolynomial {
    type Output = DensePolynomial;

    fn sub(self, rhs: Self) -> DensePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &DensePolynomial {
    type Output = DensePolynomial;

    fn mul(self, rhs: Self) -> DensePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePolynomial::new(out)
    }
}

impl Neg for &DensePolynomial {
    type Output = DensePolynomial;

    fn neg(self) -> DensePolynomial {
        DensePolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for DensePolynomial {
            type Output = DensePolynomial;
            fn $m(self, rhs: Self) -> DensePolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(cs: &[(i64, i64)]) -> DensePolynomial {
        DensePolynomial::new(cs.iter().map(|&(p, q)| ratio(p, q)).collect())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(DensePolynomial::x().eval(&int(5)), int(5));
        // (3m^2 + m)/2 at m = 4
        let d2 = poly(&[(0, 1), (1, 2), (3, 2)]);
        assert_eq!(d2.eval(&int(4)), int(26));
        // (5m^3 + 4m^2 + m)/2 at m = 3
        let d3 = poly(&[(0, 1), (1, 2), (2, 1), (5, 2)]);
        assert_eq!(d3.eval(&int(3)), int(87));
    }

    #[test]
    fn interpolation_examples() {
        let constant = DensePolynomial::interpolate(&[(int(0), int(1)), (int(1), int(1))]).unwrap();
        assert_eq!(constant, DensePolynomial::one());

        let linear = DensePolynomial::interpolate(&[(int(1), int(1)), (int(2), int(2)), (int(3), int(3))]).unwrap();
        assert_eq!(linear, DensePolynomial::x());

        let pts: Vec<_> = [(0, 0), (1, 2), (2, 7), (3, 15), (4, 26)].iter().map(|&(x, y)| (int(x), int(y))).collect();
        let d2 = DensePolynomial::interpolate(&pts).unwrap();
        assert_eq!(d2.degree(), Some(2));
        assert_eq!(d2, poly(&[(0, 1), (1, 2), (3, 2)]));
    }

    #[test]
    fn duplicate_abscissa_is_rejected() {
        let err = DensePolynomial::interpolate(&[(int(1), int(1)), (int(1), int(2))]).unwrap_err();
        assert_eq!(err, AlgebraError::DuplicateAbscissa("1".into()));
    }

    #[test]
    fn ring_examples() {
        let x = DensePolynomial::x();
        assert_eq!(&x * &x, DensePolynomial::monomial(int(1), 2));

        let x2m2 = DensePolynomial::from_integers(&[-2, 0, 1]);
        let p3 = &(&x2m2 * &x) - &x.scale(&ratio(3, 2));
        assert_eq!(p3, poly(&[(0, 1), (-7, 2), (0, 1), (1, 1)]));
        assert_eq!(p3.to_string(), "x^3 - 7/2 x");

        assert_eq!(&p3 + &DensePolynomial::zero(), p3);
        assert_eq!((&p3 - &p3).degree(), None);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&ratio(6, 4)), "3/2");
        assert_eq!(rational_string(&int(-7)), "-7");
        assert_eq!(parse_rational(" -29/10 "), Some(ratio(-29, 10)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn rational_to_f64_handles_huge_parts() {
        let big = BigRational::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(400) * 7);
        assert!((rational_to_f64(&big) - 3.0 / 7.0).abs() < 1e-16);
        assert_eq!(rational_to_f64(&ratio(-29, 10)), -2.9);
    }

    fn arb_rational() -> impl Strategy<Value = BigRational> {
        (-1000i64..1000, 1i64..200).prop_map(|(p, q)| ratio(p, q))
    }

    proptest! {
        #[test]
        fn field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            let reduced = BigRational::new(a.numer().clone(), a.denom().clone());
            prop_assert_eq!(&reduced, &a);
            prop_assert!(a.denom().is_positive());
        }

        #[test]
        fn interpolant_reproduces_points(ys in prop::collection::vec(arb_rational(), 1..8)) {
            let pts: Vec<_> = ys.iter().enumerate().map(|(i, y)| (int(i as i64 * 3 - 5), y.clone())).collect();
            let p = DensePolynomial::interpolate(&pts).unwrap();
            prop_assert!(p.degree().map_or(true, |d| d < pts.len()));
            for (x, y) in &pts {
                prop_assert_eq!(&p.eval(x), y);
            }
        }
    }
}
