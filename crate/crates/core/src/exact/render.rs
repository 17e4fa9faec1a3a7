//! Decimal and symbolic rendering of values of the form π·c/√r.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

fn atan_inv_fixed(x: u32, scale: &BigInt) -> BigInt {
    let x2 = BigInt::from(x) * x;
    let mut power = scale / x;
    let mut sum = power.clone();
    let mut k: u64 = 1;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / (2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// ⌊π·10^digits⌋, correct up to the last one or two units.
pub fn pi_fixed(digits: usize) -> BigInt {
    let guard = 10;
    let scale = BigInt::from(10u32).pow((digits + guard) as u32);
    let pi = atan_inv_fixed(5, &scale) * 16 - atan_inv_fixed(239, &scale) * 4;
    pi / BigInt::from(10u32).pow(guard as u32)
}

/// Decimal string of π·coef/√radicand with `sig` significant digits.
pub fn render_pi_over_sqrt(coef: &Rational, radicand: &Rational, sig: usize) -> String {
    if coef.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let approx = std::f64::consts::PI * coef.to_f64().unwrap_or(1.0).abs()
        / radicand.to_f64().unwrap_or(1.0).sqrt();
    let e10 = if approx.is_finite() && approx > 0.0 {
        approx.log10().floor() as i64
    } else {
        0
    };
    let places = (sig as i64 - e10 + 12).max(12) as usize;
    let scale = BigInt::from(10u32).pow(places as u32);

    // π·c/√(rn/rd) = π·c·rd/√(rn·rd)
    let pi_s = pi_fixed(places);
    let n = radicand.numer() * radicand.denom();
    let root_s = (n * &scale * &scale).sqrt();
    let num = pi_s * coef.numer().abs() * radicand.denom() * &scale;
    let den = coef.denom() * root_s;
    let v = num / den;

    let digits_len = v.to_string().len();
    let drop = digits_len as i64 - sig as i64;
    let (mantissa, shift) = if drop > 0 {
        let p = BigInt::from(10u32).pow(drop as u32);
        let (q, r) = v.div_rem(&p);
        let q = if r * 2 >= p { q + BigInt::one() } else { q };
        (q, drop - places as i64)
    } else {
        (v, -(places as i64))
    };
    let sign = if coef.is_negative() { "-" } else { "" };
    format!("{sign}{}", place_point(&mantissa, shift))
}

fn place_point(mantissa: &BigInt, shift: i64) -> String {
    let s = mantissa.to_string();
    if shift >= 0 {
        return format!("{s}{}", "0".repeat(shift as usize));
    }
    let frac = (-shift) as usize;
    let s = if s.len() <= frac {
        format!("{}{s}", "0".repeat(frac + 1 - s.len()))
    } else {
        s
    };
    let (ip, fp) = s.split_at(s.len() - frac);
    format!("{ip}.{fp}")
}

/// Splits n = s²·t by trial division of small primes.
fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::one();
    let mut t = n.clone();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(100_000u32);
    while &p * &p <= t && p < limit {
        let p2 = &p * &p;
        while (&t % &p2).is_zero() {
            t /= &p2;
            s *= &p;
        }
        p += 1;
    }
    (s, t)
}

/// Human-readable form such as `5*pi/32` or `pi/(2*sqrt(2))`.
pub fn symbolic_pi_over_sqrt(coef: &Rational, radicand: &Rational) -> String {
    if coef.is_zero() {
        return "0".to_string();
    }
    let n = radicand.numer() * radicand.denom();
    let (s, t) = square_part(&n);
    let c = coef * Rational::from_integer(radicand.denom().clone()) / Rational::from_integer(s);
    let sign = if c.is_negative() { "-" } else { "" };
    let p = c.numer().abs();
    let q = c.denom().clone();
    let top = if p.is_one() {
        "pi".to_string()
    } else {
        format!("{p}*pi")
    };
    let bottom = match (q.is_one(), t.is_one()) {
        (true, true) => String::new(),
        (false, true) => format!("/{q}"),
        (true, false) => format!("/sqrt({t})"),
        (false, false) => format!("/({q}*sqrt({t}))"),
    };
    format!("{sign}{top}{bottom}")
}
