//! The closed form
//!
//! ```text
//! N(a; m) = π P_m(a) / (2^(m+3/2) (a+1)^(m+1/2))
//! P_m(a)  = 2^(-2m) Σ_k 2^k C(2m-2k, m-k) C(m+k, k) (a+1)^k
//! ```
//!
//! together with the polynomials Q_m produced by differentiating the
//! Bessel-side expression, which coincide with P_m.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    binomial, binomial_or_zero, int, pow2, pow_rational, render_pi_over_sqrt,
    symbolic_pi_over_sqrt, Poly, Rational, RationalPoly, Var,
};

pub const VAR_A: Var = Var('a');
/// Shifted variable u = a + 1.
pub const VAR_U: Var = Var('u');

/// Decimal digits used when rendering exact values.
pub const DEFAULT_DIGITS: usize = 64;

pub fn check_domain(a: &Rational) -> Result<()> {
    if a <= &int(-1) {
        Err(Error::DivergentIntegral(a.to_string()))
    } else {
        Ok(())
    }
}

/// Coefficients of P_m in powers of (a+1): 2^{k−2m} C(2m−2k, m−k) C(m+k, k).
pub fn pm_shifted_coeffs(m: u64) -> Vec<Rational> {
    (0..=m)
        .map(|k| {
            pow2(k as i64 - 2 * m as i64)
                * Rational::from_integer(binomial(2 * m - 2 * k, m - k) * binomial(m + k, k))
        })
        .collect()
}

/// P_m as a polynomial in u = a + 1.
pub fn pm_shifted(m: u64) -> RationalPoly {
    Poly::from_coeffs(pm_shifted_coeffs(m), VAR_U)
}

/// P_m(a) in the monomial basis.
pub fn pm_poly(m: u64) -> RationalPoly {
    pm_shifted(m)
        .compose_affine(&Rational::one(), &Rational::one())
        .rename(VAR_A)
}

pub type ScalarFn = fn(u64) -> Rational;

/// The recurrence
///
/// ```text
/// κ₀ Q_{m+1} = [κ₁ (a+1) + κ₂] Q_m + [κ₃ (a+1)² + κ₄ (a+1)] Q_m'
/// ```
///
/// with κ = (2(m+1), 2(m+1), 2m+1, 2, −2) as stated. Each κ can be
/// perturbed for mutation testing.
#[derive(Clone, Debug)]
pub struct QmRecurrence {
    terms: [ScalarFn; 5],
    offsets: [Rational; 5],
}

impl Default for QmRecurrence {
    fn default() -> Self {
        QmRecurrence::stated()
    }
}

impl QmRecurrence {
    pub const LEN: usize = 5;

    pub fn stated() -> Self {
        QmRecurrence {
            terms: [
                |m| int(2 * (m as i64 + 1)),
                |m| int(2 * (m as i64 + 1)),
                |m| int(2 * m as i64 + 1),
                |_| int(2),
                |_| int(-2),
            ],
            offsets: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn perturbed(&self, i: usize, delta: Rational) -> Self {
        let mut out = self.clone();
        out.offsets[i] += delta;
        out
    }

    fn kappa(&self, i: usize, m: u64) -> Rational {
        (self.terms[i])(m) + &self.offsets[i]
    }

    /// Q_{m+1} from Q_m.
    pub fn step(&self, m: u64, q: &RationalPoly) -> Result<RationalPoly> {
        let lead = self.kappa(0, m);
        if lead.is_zero() {
            return Err(Error::ExactnessViolation(format!(
                "leading coefficient of the Q recurrence vanishes at m = {m}"
            )));
        }
        let u = Poly::from_coeffs(vec![int(1), int(1)], VAR_A);
        let one = Poly::constant(int(1), VAR_A);
        let shift = &u.scale(&self.kappa(1, m)) + &one.scale(&self.kappa(2, m));
        let deriv = &(&u * &u).scale(&self.kappa(3, m)) + &u.scale(&self.kappa(4, m));
        let rhs = &(&shift * q) + &(&deriv * &q.derivative());
        Ok(rhs.scale(&(Rational::one() / lead)))
    }

    /// Q_0, …, Q_{m_max}.
    pub fn sequence(&self, m_max: u64) -> Result<Vec<RationalPoly>> {
        let mut out = vec![Poly::constant(int(1), VAR_A)];
        for m in 0..m_max {
            let next = self.step(m, &out[m as usize])?;
            out.push(next);
        }
        Ok(out)
    }
}

/// Q_m generated by the stated recurrence from Q_0 = 1.
pub fn qm_poly(m: u64) -> RationalPoly {
    QmRecurrence::stated()
        .sequence(m)
        .expect("stated recurrence has nonzero leading coefficient")
        .pop()
        .expect("sequence is never empty")
}

/// LHS − RHS of the coefficientwise identity behind the Q recurrence: the
/// coefficient of (1+a)^k in 2(m+1)P_{m+1} minus that of the right side,
/// scaled by 2^{2m+1}. Zero for every 0 ≤ k ≤ m+1.
pub fn qm_binomial_identity_residual(m: u64, k: u64) -> BigInt {
    let (m, k) = (m as i64, k as i64);
    let b = binomial_or_zero;
    let p2 = |e: i64| BigInt::one() << e as usize;
    let wide = b(2 * m - 2 * k + 2, m - k + 1);
    let narrow = b(2 * m - 2 * k, m - k);
    let lhs = p2(k) * (m + 1) * &wide * b(m + k + 1, m + 1);
    let rhs = p2(k + 1) * (m + 1) * &wide * b(m + k - 1, m)
        + p2(k + 1) * (2 * m + 1) * &narrow * b(m + k, m)
        + p2(k + 1) * (k - 1) * &wide * b(m + k - 1, m)
        - p2(k + 2) * k * &narrow * b(m + k, m);
    lhs - rhs
}

/// N(a; m) held as π·pm_at_a·2^{−(m+3/2)}·(a+1)^{−(m+1/2)} with an exact
/// rational `pm_at_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactQuarticValue {
    pub m: u64,
    pub a: Rational,
    pub pm_at_a: Rational,
    /// Decimal rendering at the precision requested on construction.
    pub rendered: String,
}

impl ExactQuarticValue {
    pub fn new(a: Rational, m: u64, pm_at_a: Rational, digits: usize) -> Self {
        let mut v = ExactQuarticValue {
            m,
            a,
            pm_at_a,
            rendered: String::new(),
        };
        v.rendered = v.render(digits);
        v
    }

    /// Value written as π·C/√(2(a+1)); this returns C = P_m(a)/(2^{m+1}(a+1)^m).
    pub fn coefficient(&self) -> Rational {
        &self.pm_at_a / (pow2(self.m as i64 + 1) * pow_rational(&(&self.a + int(1)), self.m))
    }

    /// 2(a+1).
    pub fn radicand(&self) -> Rational {
        int(2) * (&self.a + int(1))
    }

    pub fn value(&self) -> f64 {
        let c = crate::exact::to_f64(&self.coefficient());
        std::f64::consts::PI * c / crate::exact::to_f64(&self.radicand()).sqrt()
    }

    pub fn render(&self, digits: usize) -> String {
        render_pi_over_sqrt(&self.coefficient(), &self.radicand(), digits)
    }

    pub fn symbolic(&self) -> String {
        symbolic_pi_over_sqrt(&self.coefficient(), &self.radicand())
    }
}

/// Exact closed-form value of N(a; m).
pub fn n04_closed(a: &Rational, m: u64, digits: usize) -> Result<ExactQuarticValue> {
    check_domain(a)?;
    let pm_at_a = pm_shifted(m).eval(&(a + int(1)));
    debug_assert!(pm_at_a.is_positive());
    Ok(ExactQuarticValue::new(a.clone(), m, pm_at_a, digits))
}

/// Floating-point closed form for real a > −1.
pub fn n04_closed_f64(a: f64, m: u64) -> Result<f64> {
    if a.is_nan() || a <= -1.0 {
        return Err(Error::DivergentIntegral(a.to_string()));
    }
    // Shifted basis has positive coefficients, so Horner in u = a+1 is stable.
    let u = a + 1.0;
    let p = pm_shifted(m).eval_f64(u);
    Ok(std::f64::consts::PI * p / (2f64.powf(m as f64 + 1.5) * u.powf(m as f64 + 0.5)))
}
