//! Gauss ₂F₁ and the hypergeometric / Bessel representations of N(a; m).

use std::f64::consts::PI;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::exact::recurrence::ThreeTermRecurrence;
use crate::exact::{
    factorial, gamma_half_over_sqrt_pi, int, pochhammer, pow2, rat, to_f64, Rational,
};
use crate::pm::{check_domain, pm_poly, ExactQuarticValue};
use crate::quadrature::laplace_km;
use crate::schwinger::half_beta_over_pi;

/// ₂F₁(upper[0], upper[1]; lower; ·).
#[derive(Clone, Debug, PartialEq)]
pub struct HypParams {
    pub upper: [Rational; 2],
    pub lower: Rational,
}

impl HypParams {
    pub fn new(u1: Rational, u2: Rational, lower: Rational) -> Self {
        HypParams {
            upper: [u1, u2],
            lower,
        }
    }

    /// Number of nonzero terms when an upper parameter is a nonpositive integer.
    pub fn terminating_degree(&self) -> Option<u64> {
        self.upper
            .iter()
            .filter(|u| u.is_integer() && !u.is_positive())
            .filter_map(|u| (-u).to_integer().to_u64())
            .min()
    }

    fn check_lower(&self) -> Result<()> {
        let c = &self.lower;
        if c.is_integer() && !c.is_positive() {
            let pole = (-c).to_integer().to_u64().unwrap_or(u64::MAX);
            // Harmless only if the series stops before (c)_k reaches zero.
            if self.terminating_degree().is_none_or(|n| n > pole) {
                return Err(Error::DivergentSeries(format!("lower parameter {c} is a pole")));
            }
        }
        Ok(())
    }
}

const MAX_TERMS: usize = 1_000_000;

/// Term-recurrence summation. Terminating series are summed in full;
/// otherwise |x| < 1 is required and summation stops once a geometric bound
/// on the tail falls below `tol`·|sum|.
pub fn gauss_2f1(p: &HypParams, x: f64, tol: f64) -> Result<f64> {
    p.check_lower()?;
    let [a, b] = [to_f64(&p.upper[0]), to_f64(&p.upper[1])];
    let c = to_f64(&p.lower);
    let stop = p.terminating_degree();
    if stop.is_none() && !(x.abs() < 1.0) {
        return Err(Error::DivergentSeries(format!("|x| = {} >= 1", x.abs())));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS as u64 {
        if stop == Some(k) {
            return Ok(sum);
        }
        let kf = k as f64;
        let ratio = (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        term *= ratio;
        sum += term;
        if stop.is_none() && k > 2 {
            let rho = ratio.abs().max(x.abs());
            if rho < 1.0 && term.abs() * rho / (1.0 - rho) <= tol * sum.abs() {
                return Ok(sum);
            }
        }
    }
    Err(Error::SeriesNonConvergence(MAX_TERMS))
}

/// Exact value of a terminating ₂F₁ at rational x.
pub fn gauss_2f1_exact(p: &HypParams, x: &Rational) -> Result<Rational> {
    p.check_lower()?;
    let n = p.terminating_degree().ok_or_else(|| {
        Error::InvalidArgument("exact evaluation needs a terminating series".into())
    })?;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..n {
        let kq = int(k as i64);
        term = term * (&p.upper[0] + &kq) * (&p.upper[1] + &kq) * x
            / ((&p.lower + &kq) * (&kq + int(1)));
        sum += &term;
    }
    Ok(sum)
}

fn bomo_params(m: u64) -> HypParams {
    let m = m as i64;
    HypParams::new(int(-m), int(m + 1), rat(2 * m + 3, 2))
}

/// N(a; m) = (√π/2)·Γ(2m+3/2)/Γ(2m+2)·₂F₁(2m+3/2, 1/2; m+3/2; (1−a)/2),
/// for −1 < a < 3.
pub fn n04_2f1(a: f64, m: u64) -> Result<f64> {
    if a.is_nan() || a <= -1.0 {
        return Err(Error::DivergentIntegral(a.to_string()));
    }
    if a >= 3.0 {
        return Err(Error::OutOfDomain {
            route: "2f1",
            a: a.to_string(),
            reason: "series argument (1-a)/2 leaves the unit disc for a >= 3; use the bomo route",
        });
    }
    let mi = m as i64;
    let p = HypParams::new(rat(4 * mi + 3, 2), rat(1, 2), rat(2 * mi + 3, 2));
    let f = gauss_2f1(&p, (1.0 - a) / 2.0, 1e-15)?;
    // (√π/2)·Γ(2m+3/2)/Γ(2m+2) = (π/2)·[Γ(2m+3/2)/√π]/(2m+1)!
    let pref = gamma_half_over_sqrt_pi(2 * m + 1) / Rational::from_integer(factorial(2 * m + 1));
    Ok(PI / 2.0 * to_f64(&pref) * f)
}

/// (√π a/(2√2 m!))·Γ(m+3/4)Γ(m+5/4)/Γ(m+3/2)·₂F₁(m+5/4, 3/4; m+3/2; 1−a²),
/// for 0 < a < √2.
pub fn n04_prudnikov(a: f64, m: u64) -> Result<f64> {
    if !(a > 0.0) || a * a >= 2.0 {
        return Err(Error::OutOfDomain {
            route: "prudnikov",
            a: a.to_string(),
            reason: "needs 0 < a < sqrt(2)",
        });
    }
    let mi = m as i64;
    let p = HypParams::new(rat(4 * mi + 5, 4), rat(3, 4), rat(2 * mi + 3, 2));
    let f = gauss_2f1(&p, 1.0 - a * a, 1e-15)?;
    // Γ(m+3/4)Γ(m+5/4) = (3/4)_m (5/4)_m · π√2/4, and Γ(m+3/2) = √π·g(m+1)
    let pref = pochhammer(&rat(3, 4), m) * pochhammer(&rat(5, 4), m)
        / (int(8) * Rational::from_integer(factorial(m)) * gamma_half_over_sqrt_pi(m + 1));
    Ok(PI * a * to_f64(&pref) * f)
}

/// N(a; m) = 2^{m−1/2}(a+1)^{−(m+1/2)}·B(2m+3/2, 1/2)·₂F₁(−m, m+1; m+3/2; (1−a)/2),
/// exact for rational a > −1.
pub fn n04_bomo_exact(a: &Rational, m: u64, digits: usize) -> Result<ExactQuarticValue> {
    check_domain(a)?;
    let x = (int(1) - a) / int(2);
    let f = gauss_2f1_exact(&bomo_params(m), &x)?;
    let pm_at_a = pow2(2 * m as i64 + 1) * half_beta_over_pi(m) * f;
    Ok(ExactQuarticValue::new(a.clone(), m, pm_at_a, digits))
}

/// The bomo route for a floating-point a, run exactly on its dyadic value.
pub fn n04_bomo(a: f64, m: u64) -> Result<f64> {
    let q = Rational::from_float(a).ok_or_else(|| Error::DivergentIntegral(a.to_string()))?;
    Ok(n04_bomo_exact(&q, m, 20)?.value())
}

/// (m+3/2)_m/m!·₂F₁(−m, m+1; m+3/2; (1−x)/2), the Jacobi polynomial
/// P_m^{(m+1/2, −m−1/2)}(x).
pub fn jacobi_poly(m: u64, x: &Rational) -> Result<Rational> {
    let f = gauss_2f1_exact(&bomo_params(m), &((int(1) - x) / int(2)))?;
    Ok(pochhammer(&rat(2 * m as i64 + 3, 2), m) / Rational::from_integer(factorial(m)) * f)
}

/// Jacobi polynomial against P_m at each sample, exactly.
pub fn jacobi_poly_check(m: u64, samples: &[Rational]) -> Result<CheckReport> {
    let p = pm_poly(m);
    let mut rep = CheckReport::default();
    for a in samples {
        let j = jacobi_poly(m, a)?;
        rep.exact(j == p.eval(a), || format!("m={m} a={a}"));
    }
    Ok(rep)
}

/// a_m = ₂F₁(−m, m+1; m+3/2; z) satisfies
/// (4m+7)(4m+9)z·a_{m+2} + (2m+3)(2m+5)(4z²−4z−1)·a_{m+1} − (2m+3)(2m+5)(z−1)·a_m = 0.
pub fn recur11() -> ThreeTermRecurrence {
    ThreeTermRecurrence::new(
        "recur-11",
        [
            |m, z| {
                let m = m as i64;
                -int((2 * m + 3) * (2 * m + 5)) * (z - int(1))
            },
            |m, z| {
                let m = m as i64;
                int((2 * m + 3) * (2 * m + 5)) * (int(4) * z * z - int(4) * z - int(1))
            },
            |m, z| {
                let m = m as i64;
                int((4 * m + 7) * (4 * m + 9)) * z
            },
        ],
    )
}

/// Exact residuals of `rec` on the terminating ₂F₁ sequence, m ≤ m_max.
pub fn verify_recur11(m_max: u64, zs: &[Rational], rec: &ThreeTermRecurrence) -> Result<CheckReport> {
    let mut rep = CheckReport::default();
    for z in zs {
        let seq: Vec<Rational> = (0..=m_max + 2)
            .map(|m| gauss_2f1_exact(&bomo_params(m), z))
            .collect::<Result<_>>()?;
        for (m, r) in rec.residuals(0, z, &seq).iter().enumerate() {
            rep.exact(r.is_zero(), || format!("{} residual {r} at m={m} z={z}", rec.name));
        }
    }
    Ok(rep)
}

/// ₂F₁(m+5/4, 3/4; m+3/2; ·).
fn hyp0_params(m: u64) -> HypParams {
    let m = m as i64;
    HypParams::new(rat(4 * m + 5, 4), rat(3, 4), rat(2 * m + 3, 2))
}

/// (1−2z)(1−z)^{m+1/2}·₂F₁(m+5/4, 3/4; m+3/2; 4z(1−z)) for 0 < z ≤ 1/2.
///
/// At z = 1/2 the factor (1−2z) vanishes while the ₂F₁ diverges like
/// (1−t)^{−1/2} = 1/(1−2z); the product tends to
/// (1/2)^{m+1/2}·Γ(m+3/2)√π/(Γ(m+5/4)Γ(3/4)) = 2^{1−m}·[Γ(m+3/2)/√π]/(5/4)_m.
pub fn hyp0_rhs(m: u64, z: f64) -> Result<f64> {
    if !(z > 0.0 && z <= 0.5) {
        return Err(Error::InvalidArgument(format!("hyp-0 needs 0 < z <= 1/2, got {z}")));
    }
    if z == 0.5 {
        return Ok(to_f64(&hyp0_limit(m)));
    }
    let t = 4.0 * z * (1.0 - z);
    let f = gauss_2f1(&hyp0_params(m), t, 1e-15)?;
    Ok((1.0 - 2.0 * z) * (1.0 - z).powf(m as f64 + 0.5) * f)
}

/// The z → 1/2 limit of the hyp-0 right side, an exact rational.
pub fn hyp0_limit(m: u64) -> Rational {
    pow2(1 - m as i64) * gamma_half_over_sqrt_pi(m + 1) / pochhammer(&rat(5, 4), m)
}

/// Terminating side against the transformed side, relative tolerance `tol`.
pub fn verify_hyp0(m_max: u64, zs: &[f64], tol: f64) -> Result<CheckReport> {
    let mut rep = CheckReport::default();
    for &z in zs {
        let zq = Rational::from_float(z).ok_or_else(|| Error::InvalidArgument(z.to_string()))?;
        for m in 0..=m_max {
            let lhs = to_f64(&gauss_2f1_exact(&bomo_params(m), &zq)?);
            match hyp0_rhs(m, z) {
                Ok(rhs) => rep.close(lhs, rhs, tol, || format!("hyp-0 m={m} z={z}")),
                Err(e) => rep.error(format!("hyp-0 m={m} z={z}: {e}")),
            }
        }
    }
    Ok(rep)
}

/// √2/(√(1−t)·√(1+√(1−t))).
pub fn init1_closed(t: f64) -> f64 {
    let s = (1.0 - t).sqrt();
    2f64.sqrt() / (s * (1.0 + s).sqrt())
}

/// 2√2(3+2√(1−t))/(5(1+√(1−t))^{3/2}√(1−t)).
pub fn init2_closed(t: f64) -> f64 {
    let s = (1.0 - t).sqrt();
    2.0 * 2f64.sqrt() * (3.0 + 2.0 * s) / (5.0 * (1.0 + s).powf(1.5) * s)
}

/// ₂F₁(5/4, 3/4; 3/2; t) and ₂F₁(9/4, 3/4; 5/2; t) against their closed forms.
pub fn verify_init(ts: &[f64], tol: f64) -> Result<CheckReport> {
    let mut rep = CheckReport::default();
    for &t in ts {
        let f1 = gauss_2f1(&hyp0_params(0), t, 1e-16)?;
        rep.close(f1, init1_closed(t), tol, || format!("init-1 t={t}"));
        let f2 = gauss_2f1(&hyp0_params(1), t, 1e-16)?;
        rep.close(f2, init2_closed(t), tol, || format!("init-2 t={t}"));
    }
    Ok(rep)
}

/// 2^{m−1/2}/(m!·a^{2m+3/2})·∫₀^∞ t^m e^{−bt} K_{1/4}(t) dt with b = 2/a² − 1.
pub fn n04_bessel_laplace(a: f64, m: u64, tol: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::OutOfDomain {
            route: "bessel",
            a: a.to_string(),
            reason: "the Laplace-transform form needs a > 0",
        });
    }
    let b = 2.0 / (a * a) - 1.0;
    let l = laplace_km(m, b, tol)?;
    let pref = 2f64.powf(m as f64 - 0.5)
        / (to_f64(&Rational::from_integer(factorial(m))) * a.powf(2.0 * m as f64 + 1.5));
    Ok(pref * l.value)
}
