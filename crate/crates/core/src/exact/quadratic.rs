use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{to_f64, Rational};

/// An element p + q√d of ℚ(√d) for a fixed non-square rational radicand d > 0.
///
/// Mixing elements with different radicands panics; callers build every
/// element of one computation from the same `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic {
    pub rat: Rational,
    pub surd: Rational,
    pub radicand: Rational,
}

impl Quadratic {
    pub fn new(rat: Rational, surd: Rational, radicand: Rational) -> Self {
        Quadratic {
            rat,
            surd,
            radicand,
        }
    }

    pub fn from_rational(rat: Rational, radicand: &Rational) -> Self {
        Quadratic::new(rat, Rational::zero(), radicand.clone())
    }

    /// √d.
    pub fn root(radicand: &Rational) -> Self {
        Quadratic::new(Rational::zero(), Rational::one(), radicand.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - &self.radicand * &self.surd * &self.surd
    }

    pub fn conj(&self) -> Self {
        Quadratic::new(self.rat.clone(), -self.surd.clone(), self.radicand.clone())
    }

    /// Exact quotient; `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Quadratic) -> Option<Quadratic> {
        let n = rhs.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &rhs.conj();
        Some(Quadratic::new(num.rat / &n, num.surd / n, self.radicand.clone()))
    }

    fn check(&self, other: &Quadratic) {
        assert_eq!(self.radicand, other.radicand, "mixed radicands in Q(sqrt d)");
    }

    /// Nearest f64, using the norm to avoid cancellation between p and q√d.
    pub fn to_f64(&self) -> f64 {
        let p = to_f64(&self.rat);
        let qs = to_f64(&self.surd) * to_f64(&self.radicand).sqrt();
        if self.rat.is_zero() || self.surd.is_zero() || self.rat.is_positive() == self.surd.is_positive() {
            return p + qs;
        }
        to_f64(&self.norm()) / (p - qs)
    }
}

impl<'a> Add<&'a Quadratic> for &'a Quadratic {
    type Output = Quadratic;
    fn add(self, rhs: &Quadratic) -> Quadratic {
        self.check(rhs);
        Quadratic::new(&self.rat + &rhs.rat, &self.surd + &rhs.surd, self.radicand.clone())
    }
}

impl<'a> Sub<&'a Quadratic> for &'a Quadratic {
    type Output = Quadratic;
    fn sub(self, rhs: &Quadratic) -> Quadratic {
        self.check(rhs);
        Quadratic::new(&self.rat - &rhs.rat, &self.surd - &rhs.surd, self.radicand.clone())
    }
}

impl<'a> Mul<&'a Quadratic> for &'a Quadratic {
    type Output = Quadratic;
    fn mul(self, rhs: &Quadratic) -> Quadratic {
        self.check(rhs);
        Quadratic::new(
            &self.rat * &rhs.rat + &self.radicand * &self.surd * &rhs.surd,
            &self.rat * &rhs.surd + &self.surd * &rhs.rat,
            self.radicand.clone(),
        )
    }
}

impl Neg for Quadratic {
    type Output = Quadratic;
    fn neg(self) -> Quadratic {
        Quadratic::new(-self.rat, -self.surd, self.radicand)
    }
}
