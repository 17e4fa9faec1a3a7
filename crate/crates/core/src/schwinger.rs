//! The Schwinger-parameter route:
//!
//! ```text
//! I_m(z) = ∫₀¹ x^m (1−x)^m (1 + (z²−1)x)^{−1/2} dx
//! N(a; m) = B(1/2, 2m+3/2) / (2 B(m+1, m+1)) · √z · I_m(z),   a = (z + 1/z)/2
//! ```
//!
//! I_m has a finite-sum closed form and a power series in (1−z²)/4; both
//! sides of that identity satisfy a three-term recurrence in m.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::recurrence::ThreeTermRecurrence;
use crate::exact::{
    beta_int, binomial, factorial, gamma_half_over_sqrt_pi, int, pow2, to_f64, Poly, Rational,
    Var,
};

/// z on the unit circle (|a| < 1) or on the real ray z ≥ 1 (a ≥ 1), with
/// (z + 1/z)/2 = a.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitParam {
    pub a: f64,
    /// arccos a ∈ (0, π) when |a| < 1.
    pub theta: Option<f64>,
    pub z: Complex64,
    /// Principal √z.
    pub w_sqrt_z: Complex64,
}

impl UnitParam {
    pub fn new(a: f64) -> Result<Self> {
        if a.is_nan() || a <= -1.0 {
            return Err(Error::DivergentIntegral(a.to_string()));
        }
        if a < 1.0 {
            let theta = a.acos();
            Ok(UnitParam {
                a,
                theta: Some(theta),
                z: Complex64::from_polar(1.0, theta),
                w_sqrt_z: Complex64::from_polar(1.0, theta / 2.0),
            })
        } else {
            let z = a + ((a - 1.0) * (a + 1.0)).sqrt();
            Ok(UnitParam {
                a,
                theta: None,
                z: Complex64::new(z, 0.0),
                w_sqrt_z: Complex64::new(z.sqrt(), 0.0),
            })
        }
    }
}

fn closed_prefactor(m: u64) -> Rational {
    // 2^{2m+2} / ((m+1) C(2m+1, m) C(4m+2, 2m+1))
    pow2(2 * m as i64 + 2)
        / Rational::from_integer(
            binomial(2 * m + 1, m) * binomial(4 * m + 2, 2 * m + 1) * (m + 1),
        )
}

/// I_m(z) from its finite-sum closed form.
pub fn im_closed(z: Complex64, m: u64) -> Result<Complex64> {
    let zp1 = z + 1.0;
    if zp1.norm() == 0.0 {
        return Err(Error::PoleAtMinusOne);
    }
    let zp1_sq = zp1 * zp1;
    let mut sum = Complex64::zero();
    for k in 0..=m {
        let c = to_f64(&Rational::from_integer(
            binomial(2 * m - 2 * k, m - k) * binomial(m + k, k),
        ));
        sum += zp1_sq.powu(k as u32) * z.powu((m - k) as u32) * c;
    }
    Ok(sum * to_f64(&closed_prefactor(m)) / zp1.powu(2 * m as u32 + 1))
}

/// Exact I_m(z) for rational z ≠ −1.
pub fn im_closed_exact(z: &Rational, m: u64) -> Result<Rational> {
    let zp1 = z + int(1);
    if zp1.is_zero() {
        return Err(Error::PoleAtMinusOne);
    }
    Ok(rhs00_exact_with(z, m)? / int(m as i64 + 1))
}

/// Right side of the series identity: (m+1)·I_m(z).
pub fn rhs00_exact(z: &Rational, m: u64) -> Result<Rational> {
    rhs00_exact_with(z, m)
}

fn rhs00_exact_with(z: &Rational, m: u64) -> Result<Rational> {
    let zp1 = z + int(1);
    if zp1.is_zero() {
        return Err(Error::PoleAtMinusOne);
    }
    let zp1_sq = &zp1 * &zp1;
    let mut sum = Rational::zero();
    let mut zp = Rational::one();
    let mut zz = Rational::one();
    let z_pows: Vec<Rational> = (0..=m)
        .map(|_| {
            let out = zz.clone();
            zz = &zz * z;
            out
        })
        .collect();
    for k in 0..=m {
        let c = Rational::from_integer(binomial(2 * m - 2 * k, m - k) * binomial(m + k, k));
        sum += c * &zp * &z_pows[(m - k) as usize];
        zp = &zp * &zp1_sq;
    }
    let den = crate::exact::pow_rational(&zp1, 2 * m + 1);
    Ok(closed_prefactor(m) * int(m as i64 + 1) * sum / den)
}

/// Exact I_m(z) for rational z > 0 by the substitution u² = 1 + (z²−1)x:
/// I_m(z) = 2/(z²−1)^{2m+1} ∫₁^z (u²−1)^m (z²−u²)^m du. Independent of the
/// closed form, so it serves as its oracle.
pub fn im_substitution_exact(z: &Rational, m: u64) -> Result<Rational> {
    if z <= &Rational::zero() {
        return Err(Error::InvalidArgument(format!("substitution needs z > 0, got {z}")));
    }
    let c = z * z - int(1);
    if c.is_zero() {
        return beta_int(m + 1, m + 1);
    }
    let u = Var('u');
    let left = Poly::from_coeffs(vec![int(-1), int(0), int(1)], u);
    let right = Poly::from_coeffs(vec![z * z, int(0), int(-1)], u);
    let mut p = Poly::constant(int(1), u);
    for _ in 0..m {
        p = &(&p * &left) * &right;
    }
    // Antiderivative evaluated between 1 and z.
    let prim = |x: &Rational| {
        let mut acc = Rational::zero();
        let mut xp = x.clone();
        for (k, ck) in p.coeffs().iter().enumerate() {
            acc += ck * &xp / int(k as i64 + 1);
            xp = &xp * x;
        }
        acc
    };
    let integral = prim(z) - prim(&int(1));
    Ok(int(2) * integral / crate::exact::pow_rational(&c, 2 * m + 1))
}

/// Partial sums of (1/(m+1)) Σ C(2k,k)/C(2m+k+1,m+1)·((1−z²)/4)^k.
pub fn im_series(z: Complex64, m: u64, tol: f64) -> Result<Complex64> {
    // C(2k,k) ~ 4^k, so the terms behave like (1−z²)^k up to a power of k.
    let x = (Complex64::one() - z * z) / 4.0;
    if (4.0 * x).norm() >= 1.0 {
        return Err(Error::DivergentSeries(format!("|1 - z^2| >= 1 at z = {z}")));
    }
    let m_f = m as f64;
    let first = 1.0 / to_f64(&Rational::from_integer(binomial(2 * m + 1, m + 1)));
    let mut term = Complex64::new(first, 0.0);
    let mut sum = term;
    const MAX_TERMS: usize = 200_000;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let ratio = 2.0 * (2.0 * kf + 1.0) / (kf + 1.0) * (kf + m_f + 1.0) / (2.0 * m_f + kf + 2.0);
        term = term * x * ratio;
        sum += term;
        if term.norm() < tol * sum.norm() {
            return Ok(sum / (m_f + 1.0));
        }
    }
    Err(Error::SeriesNonConvergence(MAX_TERMS))
}

/// B(1/2, 2m+3/2) / π = (4m+2)! / (4^{2m+1} (2m+1)!²).
pub fn half_beta_over_pi(m: u64) -> Rational {
    gamma_half_over_sqrt_pi(2 * m + 1) / Rational::from_integer(factorial(2 * m + 1))
}

/// Maximum tolerated |Im| / |Re| of √z·I_m(z).
pub const IMAGINARY_TOL: f64 = 1e-12;

/// N(a; m) by the Schwinger route.
pub fn n04_schwinger(a: f64, m: u64) -> Result<f64> {
    let p = UnitParam::new(a)?;
    let v = p.w_sqrt_z * im_closed(p.z, m)?;
    if v.im.abs() > IMAGINARY_TOL * v.norm() {
        return Err(Error::ImaginaryResidue {
            residue: v.im.abs() / v.norm(),
            tol: IMAGINARY_TOL,
        });
    }
    let pref = half_beta_over_pi(m) / (int(2) * beta_int(m + 1, m + 1)?);
    Ok(std::f64::consts::PI * to_f64(&pref) * v.re)
}

/// The recurrence in m satisfied by both sides of the series identity for
/// a_m = (m+1)·I_m(z).
pub fn formula00_recurrence() -> ThreeTermRecurrence {
    ThreeTermRecurrence::new(
        "formula-00",
        [
            |m, z| {
                let m = m as i64;
                -int(4) * z * z * int((m + 2) * (m + 3))
            },
            |m, z| {
                let m = m as i64;
                let z2 = z * z;
                -(&z2 * &z2 - int(6) * &z2 + int(1)) * int((2 * m + 6) * (2 * m + 3))
            },
            |m, z| {
                let m = m as i64;
                let c = z * z - int(1);
                &c * &c * int((4 * m + 9) * (4 * m + 7))
            },
        ],
    )
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Formula00Report {
    pub cases: usize,
    /// (m, z) with a nonzero exact recurrence residual.
    pub residual_failures: Vec<(u64, Rational)>,
    /// (m, z, relative deviation) where series and closed form disagree.
    pub series_failures: Vec<(u64, Rational, f64)>,
    pub base_failures: Vec<(u64, Rational)>,
    /// Samples outside the series' disc of convergence: recurrence only.
    pub series_skipped: Vec<Rational>,
    pub max_series_deviation: f64,
}

impl Formula00Report {
    pub fn passed(&self) -> bool {
        self.residual_failures.is_empty()
            && self.series_failures.is_empty()
            && self.base_failures.is_empty()
    }
}

/// Checks the recurrence on the closed side with exact residuals, the
/// series side numerically inside its disc, and m = 0, 1 exactly against the
/// substitution integral.
pub fn verify_formula00(
    m_max: u64,
    z_samples: &[Rational],
    rec: &ThreeTermRecurrence,
) -> Result<Formula00Report> {
    let mut rep = Formula00Report::default();
    for z in z_samples {
        if z == &int(1) || z == &int(-1) {
            return Err(Error::InvalidArgument(format!("z = {z} is excluded")));
        }
        let seq: Vec<Rational> = (0..=m_max + 2)
            .map(|m| rhs00_exact(z, m))
            .collect::<Result<_>>()?;
        for (j, r) in rec.residuals(0, z, &seq).into_iter().enumerate().take(m_max as usize + 1) {
            rep.cases += 1;
            if !r.is_zero() {
                rep.residual_failures.push((j as u64, z.clone()));
            }
        }
        if z > &Rational::zero() {
            for m in 0..=1u64 {
                rep.cases += 1;
                if im_substitution_exact(z, m)? * int(m as i64 + 1) != seq[m as usize] {
                    rep.base_failures.push((m, z.clone()));
                }
            }
        }
        let zf = Complex64::new(to_f64(z), 0.0);
        if (Complex64::one() - zf * zf).norm() >= 1.0 {
            rep.series_skipped.push(z.clone());
            continue;
        }
        for m in 0..=m_max {
            rep.cases += 1;
            let s = im_series(zf, m, 1e-16)?.re * (m as f64 + 1.0);
            let c = to_f64(&seq[m as usize]);
            let dev = ((s - c) / c).abs();
            rep.max_series_deviation = rep.max_series_deviation.max(dev);
            if !(dev <= 1e-10) {
                rep.series_failures.push((m, z.clone(), dev));
            }
        }
    }
    Ok(rep)
}
