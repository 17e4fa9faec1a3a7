use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, SqrtTwo};
use crate::error::{Error, Result};

/// Coefficient ring of a dense polynomial.
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_u64(n: u64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Coeff for Rational {
    fn from_u64(n: u64) -> Self {
        Rational::from_integer(n.into())
    }
    fn to_f64(&self) -> f64 {
        super::to_f64(self)
    }
}

impl Coeff for SqrtTwo {
    fn from_u64(n: u64) -> Self {
        SqrtTwo::from_rational(Rational::from_integer(n.into()))
    }
    fn to_f64(&self) -> f64 {
        SqrtTwo::to_f64(self)
    }
}

/// Symbolic name of the indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Var(pub char);

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
    var: Var,
}

pub type RationalPoly = Poly<Rational>;
pub type SqrtTwoPoly = Poly<SqrtTwo>;

impl<T: Coeff> Poly<T> {
    pub fn from_coeffs(coeffs: Vec<T>, var: Var) -> Self {
        let mut p = Poly { coeffs, var };
        p.normalize();
        p
    }

    pub fn zero(var: Var) -> Self {
        Poly { coeffs: Vec::new(), var }
    }

    pub fn constant(c: T, var: Var) -> Self {
        Poly::from_coeffs(vec![c], var)
    }

    /// The indeterminate itself.
    pub fn x(var: Var) -> Self {
        Poly::from_coeffs(vec![T::zero(), T::one()], var)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.var.0, other.var.0))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Poly::from_coeffs(coeffs, self.var))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Poly::from_coeffs(coeffs, self.var))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.var));
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Poly::from_coeffs(out, self.var))
    }

    pub fn scale(&self, c: &T) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.clone() * c.clone()).collect();
        Poly::from_coeffs(coeffs, self.var)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_u64(k as u64))
            .collect();
        Poly::from_coeffs(coeffs, self.var)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    /// p(αx + β), in the same variable.
    pub fn compose_affine(&self, alpha: &T, beta: &T) -> Self {
        let lin = Poly::from_coeffs(vec![beta.clone(), alpha.clone()], self.var);
        self.coeffs.iter().rev().fold(Poly::zero(self.var), |acc, c| {
            &(&acc * &lin) + &Poly::constant(c.clone(), self.var)
        })
    }

    /// Same coefficients, different variable name.
    pub fn rename(&self, var: Var) -> Self {
        Poly {
            coeffs: self.coeffs.clone(),
            var,
        }
    }
}

impl<'a, T: Coeff> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    /// Panics on a variable mismatch; use `try_add` to get an error instead.
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        self.try_add(rhs).expect("polynomial variable mismatch")
    }
}

impl<'a, T: Coeff> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self.try_sub(rhs).expect("polynomial variable mismatch")
    }
}

impl<'a, T: Coeff> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        self.try_mul(rhs).expect("polynomial variable mismatch")
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{}", self.var.0)?,
                _ => write!(f, "({c})*{}^{k}", self.var.0)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    const A: Var = Var('a');

    fn rp(c: &[(i64, i64)]) -> RationalPoly {
        Poly::from_coeffs(c.iter().map(|&(n, d)| rat(n, d)).collect(), A)
    }

    #[test]
    fn derivative_and_eval() {
        let p = rp(&[(3, 2), (1, 1)]);
        assert_eq!(p.derivative(), Poly::constant(int(1), A));
        assert_eq!(p.eval(&int(1)), rat(5, 2));
        assert_eq!(p.eval_f64(1.0), 2.5);
        assert_eq!(Poly::constant(int(7), A).derivative(), Poly::zero(A));
    }

    #[test]
    fn sqrt_two_constant_product() {
        let one = SqrtTwo::one();
        let x = Poly::constant(&one + &SqrtTwo::sqrt2(), A);
        let y = Poly::constant(&one - &SqrtTwo::sqrt2(), A);
        assert_eq!(&x * &y, Poly::constant(SqrtTwo::from_rational(int(-1)), A));
    }

    #[test]
    fn normalization() {
        let p = rp(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn variable_mismatch() {
        let p = rp(&[(1, 1)]);
        let q = p.rename(Var('b'));
        assert_eq!(p.try_add(&q), Err(Error::VariableMismatch('a', 'b')));
        assert_eq!(p.try_mul(&q), Err(Error::VariableMismatch('a', 'b')));
    }

    #[test]
    fn compose_shift() {
        // (u)^2 at u = a + 1 is a^2 + 2a + 1.
        let p = rp(&[(0, 1), (0, 1), (1, 1)]);
        assert_eq!(p.compose_affine(&int(1), &int(1)), rp(&[(1, 1), (2, 1), (1, 1)]));
    }

    fn small_poly() -> impl Strategy<Value = RationalPoly> {
        prop::collection::vec((-9i64..10, 1i64..5), 0..5)
            .prop_map(|v| Poly::from_coeffs(v.into_iter().map(|(n, d)| rat(n, d)).collect(), A))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &q, &q + &p);
        }

        #[test]
        fn leibniz(p in small_poly(), q in small_poly()) {
            let lhs = (&p * &q).derivative();
            let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_is_homomorphism(p in small_poly(), q in small_poly(), n in -5i64..5, d in 1i64..4) {
            let x = rat(n, d);
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        }
    }
}
