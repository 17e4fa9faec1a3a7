//! Exact arithmetic shared by every closed-form route.
//!
//! Rationals are `num_rational::BigRational`, which keeps numerator and
//! denominator coprime with a positive denominator after every operation.
//! On top of that this module provides binomials with rational upper
//! argument, integer beta values, the ring ℚ[√2], a general quadratic
//! extension ℚ(√d), dense univariate polynomials and decimal rendering.

mod poly;
mod quadratic;
pub mod recurrence;
mod render;
mod sqrt_two;

pub use poly::{Coeff, Poly, RationalPoly, SqrtTwoPoly, Var};
pub use quadratic::Quadratic;
pub use render::{pi_fixed, render_pi_over_sqrt, symbolic_pi_over_sqrt};
pub use sqrt_two::SqrtTwo;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Ordinary binomial coefficient C(n, k) for naturals.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// C(n, k) with the convention that it vanishes outside 0 ≤ k ≤ n.
pub fn binomial_or_zero(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Generalized binomial α(α−1)···(α−k+1)/k!.
pub fn binom_general(alpha: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= alpha - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// B(a, b) = (a+b)/(ab) · C(a+b, a)^{-1} for positive integers.
pub fn beta_int(a: u64, b: u64) -> Result<Rational> {
    if a == 0 || b == 0 {
        return Err(Error::BetaPole(a, b));
    }
    let num = BigInt::from(a + b);
    let den = BigInt::from(a) * BigInt::from(b) * binomial(a + b, a);
    Ok(Rational::new(num, den))
}

/// Γ(n + 1/2)/√π = (2n)!/(4ⁿ n!).
pub fn gamma_half_over_sqrt_pi(n: u64) -> Rational {
    Rational::new(
        factorial(2 * n),
        BigInt::from(4u32).pow(n as u32) * factorial(n),
    )
}

/// Rising factorial (x)_n.
pub fn pochhammer(x: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n {
        acc *= x + Rational::from_integer(BigInt::from(i));
    }
    acc
}

/// 2^e as an exact rational, e may be negative.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs() as usize;
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub fn pow_rational(base: &Rational, e: u64) -> Rational {
    num_traits::pow(base.clone(), e as usize)
}

/// Exact square root when `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Parses `p/q`, an integer, or a decimal with optional exponent, exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational or decimal: '{s}'"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{ip}{fp}0").parse().map_err(|_| bad())?;
    let digits = digits / 10;
    let scale = exp - fp.len() as i64;
    let ten = BigInt::from(10u32);
    let mut value = if scale >= 0 {
        Rational::from_integer(digits * ten.pow(scale as u32))
    } else {
        Rational::new(digits, ten.pow((-scale) as u32))
    };
    if neg {
        value = -value;
    }
    Ok(value)
}
