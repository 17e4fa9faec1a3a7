//! N(a; m) = (π/2)·s_{λ(2m+1)}(q)/s_{λ(2m+2)}(q), where q holds m+1 copies
//! each of w and 1/w with w² + w⁻² = 2a.
//!
//! Every h_k of q is a polynomial in c = w + 1/w, and c² = 2a + 2, so for
//! rational a the whole computation lives in ℚ(√(2a+2)) and is exact.

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{
    homogeneous_syms, homogeneous_syms_reciprocal, jacobi_trudi_degree, schur_eval,
    schur_from_h, schur_from_h_complex, Partition, VarMultiset,
};
use crate::error::{Error, Result};
use crate::exact::{binomial, int, pow2, pow_rational, rational_sqrt, Quadratic, Rational};
use crate::pm::{check_domain, ExactQuarticValue};
use crate::schwinger::UnitParam;

/// s_{λ(2m+1)}(q)/s_{λ(2m+2)}(q) as an element of ℚ(√(2a+2)).
pub fn schur_ratio_exact(a: &Rational, m: u64) -> Result<Quadratic> {
    check_domain(a)?;
    let d = int(2) * (a + int(1));
    let num = Partition::staircase(2 * m as usize + 1);
    let den = Partition::staircase(2 * m as usize + 2);
    let k_max = jacobi_trudi_degree(&den);
    let pairs = m as usize + 1;
    if let Some(c) = rational_sqrt(&d) {
        let h = homogeneous_syms_reciprocal(&c, pairs, k_max);
        let r = schur_from_h(&num, &h) / schur_from_h(&den, &h);
        return Ok(Quadratic::from_rational(r, &d));
    }
    let c = Quadratic::root(&d);
    let h = homogeneous_syms_reciprocal(&c, pairs, k_max);
    let top = schur_from_h(&num, &h);
    let bottom = schur_from_h(&den, &h);
    top.checked_div(&bottom)
        .ok_or_else(|| Error::ExactnessViolation("vanishing Schur denominator".into()))
}

/// Exact N(a; m) by the Schur route. The ratio times √(2a+2)/2 must be
/// rational; anything else is reported as an exactness violation.
pub fn n04_schur_exact(a: &Rational, m: u64, digits: usize) -> Result<ExactQuarticValue> {
    let ratio = schur_ratio_exact(a, m)?;
    let d = ratio.radicand.clone();
    // (π/2)·ratio = π·C/√d  ⇒  C = ratio·√d/2
    let coef = match rational_sqrt(&d) {
        Some(s) => {
            debug_assert!(ratio.surd.is_zero());
            &ratio.rat * s / int(2)
        }
        None => {
            let prod = &ratio * &Quadratic::root(&d);
            if !prod.surd.is_zero() {
                return Err(Error::ExactnessViolation(format!(
                    "Schur ratio times sqrt({d}) has irrational part {}",
                    prod.surd
                )));
            }
            prod.rat / int(2)
        }
    };
    let pm_at_a = coef * pow2(m as i64 + 1) * pow_rational(&(a + int(1)), m);
    Ok(ExactQuarticValue::new(a.clone(), m, pm_at_a, digits))
}

/// Schur route for a floating-point a: every f64 is a dyadic rational, so
/// this runs the exact ℚ(√(2a+2)) computation on that rational.
pub fn n04_schur(a: f64, m: u64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::DivergentIntegral(a.to_string()));
    }
    let exact = Rational::from_float(a).expect("finite float");
    Ok(n04_schur_exact(&exact, m, 20)?.value())
}

/// The literal floating-point evaluation at q = (w, …, 1/w, …) with complex w
/// and pivoted elimination. Jacobi–Trudi determinants cancel heavily, so
/// accuracy degrades quickly with m (about 1e-9 by m = 5 near a = −1, and
/// much worse for a > 1); kept as a diagnostic next to the exact route.
pub fn n04_schur_pivoted(a: f64, m: u64) -> Result<f64> {
    let p = UnitParam::new(a)?;
    let w = p.w_sqrt_z;
    let back = (w * w + 1.0 / (w * w)).re;
    if (back - 2.0 * a).abs() > 1e-10 * (1.0 + a.abs()) {
        return Err(Error::InconsistentW {
            got: back,
            expected: 2.0 * a,
        });
    }
    let pairs = m as usize + 1;
    let vars = VarMultiset::complex(vec![(w, pairs), (1.0 / w, pairs)])?;
    let num = Partition::staircase(2 * pairs - 1);
    let den = Partition::staircase(2 * pairs);
    let h = homogeneous_syms(&vars, jacobi_trudi_degree(&den));
    let r: Complex64 = schur_from_h_complex(&num, &h) / schur_from_h_complex(&den, &h);
    if r.im.abs() > 1e-9 * r.norm() {
        return Err(Error::ImaginaryResidue {
            residue: r.im.abs() / r.norm(),
            tol: 1e-9,
        });
    }
    Ok(std::f64::consts::FRAC_PI_2 * r.re)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorollaryReport {
    pub m: u64,
    pub w: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// 2^{−2m} Σ_k C(2k,k) C(2m−k,m) (w + 1/w)^{−(2k+1)}.
pub fn corollary_rhs(m: u64, w: &Rational) -> Result<Rational> {
    if w.is_zero() {
        return Err(Error::InvalidArgument("w must be nonzero".into()));
    }
    let c = w + Rational::one() / w;
    if c.is_zero() {
        return Err(Error::InvalidArgument("w + 1/w must be nonzero".into()));
    }
    let inv = Rational::one() / &c;
    let inv2 = &inv * &inv;
    let mut p = inv;
    let mut sum = Rational::zero();
    for k in 0..=m {
        sum += Rational::from_integer(binomial(2 * k, k) * binomial(2 * m - k, m)) * &p;
        p = &p * &inv2;
    }
    Ok(sum * pow2(-2 * m as i64))
}

/// s_{λ(2m+1)}(q)/s_{λ(2m+3)}(q) by Jacobi–Trudi against the binomial sum.
pub fn corollary_check(m: u64, w: &Rational) -> Result<CorollaryReport> {
    let rhs = corollary_rhs(m, w)?;
    let pairs = m as usize + 1;
    let vars = VarMultiset::rational(vec![(w.clone(), pairs), (Rational::one() / w, pairs)])?;
    let top = schur_eval(&Partition::staircase(2 * pairs - 1), &vars)?;
    let bottom = schur_eval(&Partition::staircase(2 * pairs + 1), &vars)?;
    Ok(CorollaryReport {
        m,
        w: w.clone(),
        lhs: top / bottom,
        rhs,
    })
}
