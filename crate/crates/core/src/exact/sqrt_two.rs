use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{to_f64, Rational};

/// An element p + q√2 of ℚ[√2], held exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtTwo {
    pub rat: Rational,
    pub surd: Rational,
}

impl SqrtTwo {
    pub fn new(rat: Rational, surd: Rational) -> Self {
        SqrtTwo { rat, surd }
    }

    pub fn from_rational(rat: Rational) -> Self {
        SqrtTwo {
            rat,
            surd: Rational::zero(),
        }
    }

    /// √2 itself.
    pub fn sqrt2() -> Self {
        SqrtTwo {
            rat: Rational::zero(),
            surd: Rational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        SqrtTwo {
            rat: self.rat.clone(),
            surd: -self.surd.clone(),
        }
    }

    /// Field norm p² − 2q².
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(2.into()) * &self.surd * &self.surd
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        SqrtTwo {
            rat: &self.rat * r,
            surd: &self.surd * r,
        }
    }

    pub fn recip(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(SqrtTwo {
            rat: c.rat / &n,
            surd: c.surd / n,
        })
    }

    /// Nearest f64 without cancellation: when p and q have opposite signs
    /// the value is computed as (p² − 2q²)/(p − q√2).
    pub fn to_f64(&self) -> f64 {
        let p = to_f64(&self.rat);
        let q = to_f64(&self.surd);
        if self.rat.is_zero() || self.surd.is_zero() || self.rat.is_positive() == self.surd.is_positive() {
            return p + q * std::f64::consts::SQRT_2;
        }
        to_f64(&self.norm()) / (p - q * std::f64::consts::SQRT_2)
    }
}

impl fmt::Display for SqrtTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.surd.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}*sqrt(2)", self.surd),
            (false, false) => write!(f, "{} + {}*sqrt(2)", self.rat, self.surd),
        }
    }
}

impl Zero for SqrtTwo {
    fn zero() -> Self {
        SqrtTwo::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }
}

impl One for SqrtTwo {
    fn one() -> Self {
        SqrtTwo::from_rational(Rational::one())
    }
}

impl Add for SqrtTwo {
    type Output = SqrtTwo;
    fn add(self, rhs: SqrtTwo) -> SqrtTwo {
        &self + &rhs
    }
}

impl<'a> Add<&'a SqrtTwo> for &'a SqrtTwo {
    type Output = SqrtTwo;
    fn add(self, rhs: &SqrtTwo) -> SqrtTwo {
        SqrtTwo {
            rat: &self.rat + &rhs.rat,
            surd: &self.surd + &rhs.surd,
        }
    }
}

impl Sub for SqrtTwo {
    type Output = SqrtTwo;
    fn sub(self, rhs: SqrtTwo) -> SqrtTwo {
        &self - &rhs
    }
}

impl<'a> Sub<&'a SqrtTwo> for &'a SqrtTwo {
    type Output = SqrtTwo;
    fn sub(self, rhs: &SqrtTwo) -> SqrtTwo {
        SqrtTwo {
            rat: &self.rat - &rhs.rat,
            surd: &self.surd - &rhs.surd,
        }
    }
}

impl Mul for SqrtTwo {
    type Output = SqrtTwo;
    fn mul(self, rhs: SqrtTwo) -> SqrtTwo {
        &self * &rhs
    }
}

impl<'a> Mul<&'a SqrtTwo> for &'a SqrtTwo {
    type Output = SqrtTwo;
    fn mul(self, rhs: &SqrtTwo) -> SqrtTwo {
        let two = Rational::from_integer(2.into());
        SqrtTwo {
            rat: &self.rat * &rhs.rat + two * &self.surd * &rhs.surd,
            surd: &self.rat * &rhs.surd + &self.surd * &rhs.rat,
        }
    }
}

impl Div for SqrtTwo {
    type Output = SqrtTwo;
    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, rhs: SqrtTwo) -> SqrtTwo {
        let inv = rhs.recip().expect("division by zero in Q[sqrt 2]");
        &self * &inv
    }
}

impl Neg for SqrtTwo {
    type Output = SqrtTwo;
    fn neg(self) -> SqrtTwo {
        SqrtTwo {
            rat: -self.rat,
            surd: -self.surd,
        }
    }
}
