//! Numerical ground truth: double-exponential quadrature on (0, ∞), the
//! MacDonald function K_ν from its cosh integral, and Laplace transforms of
//! t^m K_{1/4}(t).
//!
//! Everything here runs in f64. Tolerances are relative to the value being
//! computed.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// |S_h − S_{2h}| at the accepted level; the true error is typically far smaller.
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

const MIN_LEVEL: usize = 3;
const MAX_LEVEL: usize = 12;
/// exp-sinh nodes beyond |t| = T_MAX lie outside [1e-300, 1e300].
const T_MAX: f64 = 6.8;
/// A run of this many negligible terms ends the outward sweep.
const TAIL_RUN: usize = 4;

/// Adds f(x(t))·x'(t) over t = start, start ± step, … in one direction.
fn sweep<F: Fn(f64) -> f64>(
    f: &F,
    start: f64,
    step: f64,
    scale: f64,
    evals: &mut usize,
) -> Result<f64> {
    let mut sum = 0.0;
    let mut small = 0;
    let mut t = start;
    while t.abs() <= T_MAX {
        let sh = FRAC_PI_2 * t.sinh();
        let x = sh.exp();
        let w = x * FRAC_PI_2 * t.cosh();
        let fx = f(x);
        *evals += 1;
        if !fx.is_finite() {
            return Err(Error::NonFiniteIntegrand(x));
        }
        let term = fx * w;
        sum += term;
        if term.abs() <= 1e-18 * (scale.abs() + sum.abs()) {
            small += 1;
            if small >= TAIL_RUN {
                break;
            }
        } else {
            small = 0;
        }
        t += step;
    }
    Ok(sum)
}

/// ∫₀^∞ f(x) dx by exp-sinh: x = exp(π/2·sinh t) and the trapezoid rule in t,
/// halving the step until two successive levels agree to `tol` (relative).
pub fn integrate_semiaxis<F: Fn(f64) -> f64>(f: F, tol: f64) -> Result<QuadResult> {
    let mut evals = 0;
    let mut h = 1.0;
    // Level 0: all integer nodes.
    let centre = {
        let v = f(1.0);
        evals += 1;
        if !v.is_finite() {
            return Err(Error::NonFiniteIntegrand(1.0));
        }
        v * FRAC_PI_2
    };
    let mut raw = centre;
    raw += sweep(&f, 1.0, 1.0, raw, &mut evals)?;
    raw += sweep(&f, -1.0, -1.0, raw, &mut evals)?;
    let mut estimate = raw * h;
    let mut last_diff = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h /= 2.0;
        // New nodes are the odd multiples of h.
        let up = sweep(&f, h, 2.0 * h, raw, &mut evals)?;
        let down = sweep(&f, -h, -2.0 * h, raw, &mut evals)?;
        raw += up + down;
        let next = raw * h;
        last_diff = (next - estimate).abs();
        estimate = next;
        if level >= MIN_LEVEL && last_diff <= tol * estimate.abs().max(f64::MIN_POSITIVE) {
            return Ok(QuadResult {
                value: estimate,
                abs_error_estimate: last_diff,
                evaluations: evals,
            });
        }
    }
    Err(Error::QuadratureNonConvergence {
        levels: MAX_LEVEL,
        last_diff,
    })
}

/// ∫₀¹ f(x) dx via x = s/(1+s).
pub fn integrate_unit<F: Fn(f64) -> f64>(f: F, tol: f64) -> Result<QuadResult> {
    integrate_semiaxis(
        |s| {
            let d = 1.0 + s;
            if !d.is_finite() {
                return 0.0;
            }
            f(s / d) / (d * d)
        },
        tol,
    )
}

/// (x⁴ + 2a x² + 1)^{−(m+1)}, written to stay accurate near a = −1.
pub fn quartic_integrand(a: f64, m: u64, x: f64) -> f64 {
    let x2 = x * x;
    let q = (x2 + a) * (x2 + a) + (1.0 - a) * (1.0 + a);
    q.powi(-(m as i32 + 1))
}

/// Direct quadrature of N(a; m).
pub fn n04_direct(a: f64, m: u64, tol: f64) -> Result<QuadResult> {
    if a.is_nan() || a <= -1.0 {
        return Err(Error::DivergentIntegral(a.to_string()));
    }
    integrate_semiaxis(|x| quartic_integrand(a, m, x), tol)
}

/// e^t K_ν(t) = ∫₀^∞ exp(−2t sinh²(u/2)) cosh(νu) du by the trapezoid rule,
/// which converges geometrically for this even, entire integrand.
pub fn bessel_k_scaled(nu: f64, t: f64, tol: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidArgument(format!("K_nu needs t > 0, got {t}")));
    }
    if nu.abs() >= 1.0 {
        return Err(Error::InvalidArgument(format!("|nu| < 1 required, got {nu}")));
    }
    let g = |u: f64| {
        let s = (0.5 * u).sinh();
        (-2.0 * t * s * s).exp() * (nu * u).cosh()
    };
    let trapezoid = |h: f64| {
        let mut sum = 0.5 * g(0.0);
        let mut k = 1;
        loop {
            let v = g(k as f64 * h);
            sum += v;
            if v <= 1e-3 * tol * sum {
                break;
            }
            k += 1;
        }
        sum * h
    };
    let mut h = 0.5 * (1.0 / t.sqrt()).min(1.0);
    let mut prev = trapezoid(h);
    let mut diff = f64::INFINITY;
    for _ in 0..12 {
        h /= 2.0;
        let next = trapezoid(h);
        diff = (next - prev).abs();
        prev = next;
        if diff <= tol * next {
            return Ok(next);
        }
    }
    Err(Error::QuadratureNonConvergence {
        levels: 12,
        last_diff: diff,
    })
}

/// K_ν(t) for t > 0, |ν| < 1.
pub fn bessel_k(nu: f64, t: f64, tol: f64) -> Result<f64> {
    Ok(bessel_k_scaled(nu, t, tol)? * (-t).exp())
}

fn inner_tol(tol: f64) -> f64 {
    (tol * 1e-2).max(1e-15)
}

/// ∫₀^∞ t^m e^{−bt} K_{1/4}(t) dt, b > −1.
pub fn laplace_km(m: u64, b: f64, tol: f64) -> Result<QuadResult> {
    if b.is_nan() || b <= -1.0 {
        return Err(Error::InvalidArgument(format!(
            "Laplace transform of K_1/4 needs b > -1, got {b}"
        )));
    }
    let itol = inner_tol(tol);
    // Errors inside the integrand are surfaced as NaN and then rejected.
    let r = integrate_semiaxis(
        |t| {
            let e = m as f64 * t.ln() - (b + 1.0) * t;
            if e < -745.0 {
                return 0.0;
            }
            bessel_k_scaled(0.25, t, itol).map_or(f64::NAN, |k| e.exp() * k)
        },
        tol,
    )?;
    Ok(r)
}

/// ∫₀^∞ exp(−μx⁴ − 2νx²) dx by quadrature.
pub fn entry_3469_lhs(mu: f64, nu: f64, tol: f64) -> Result<QuadResult> {
    integrate_semiaxis(|x| (-mu * x.powi(4) - 2.0 * nu * x * x).exp(), tol)
}

/// ¼√(2ν/μ)·exp(ν²/2μ)·K_{1/4}(ν²/2μ).
pub fn entry_3469_rhs(mu: f64, nu: f64, tol: f64) -> Result<f64> {
    let s = nu * nu / (2.0 * mu);
    Ok(0.25 * (2.0 * nu / mu).sqrt() * bessel_k_scaled(0.25, s, tol)?)
}

/// π/(2cos(πν/2)) = ∫₀^∞ K_ν(t) dt.
pub fn integral_of_k(nu: f64) -> f64 {
    PI / (2.0 * (PI * nu / 2.0).cos())
}
