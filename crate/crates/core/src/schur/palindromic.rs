//! ∫₀^∞ dx / Q(x)^m for an even palindromic Q, through the roots of Q in
//! y = x²: Q = ∏ (x² + w_j²), the w_j come in reciprocal pairs, and the
//! integral is (π/2)·s_{λ(M−1)}(q)/s_{λ(M)}(q) with q holding m copies of
//! every w_j (M = m·deg_y Q).

use num_complex::Complex64;

use super::{homogeneous_syms, jacobi_trudi_degree, schur_from_h_complex, Partition, VarMultiset};
use crate::error::{Error, Result};

/// Reciprocal pairs must satisfy |y_j·y_k − 1| below this.
pub const PALINDROMIC_PAIR_TOL: f64 = 1e-9;

const MAX_ITER: usize = 1000;

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    // value, derivative, and the running bound Σ|c_k||z|^k for the rounding test
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    let r = z.norm();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        bound = bound * r + c.norm();
    }
    (p, dp, bound)
}

/// All roots of a monic polynomial (coefficients constant first) by
/// Aberth–Ehrlich iteration, stopping once every |p(z_j)| is within the
/// rounding error of its evaluation.
///
/// Multiple roots come back as clusters whose members are only accurate to
/// about ε^{1/k}; their mean is accurate to about ε.
pub fn aberth_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    if (lead - 1.0).norm() > 1e-14 {
        return Err(Error::NotMonic);
    }
    let radius = coeffs[0].norm().powf(1.0 / n as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * j as f64 / n as f64 + 0.4))
        .collect();
    let eps = f64::EPSILON * 4.0 * (n as f64 + 1.0);
    for _ in 0..MAX_ITER {
        let mut all_small = true;
        for j in 0..n {
            let (p, dp, bound) = horner(coeffs, z[j]);
            if p.norm() <= eps * bound {
                continue;
            }
            all_small = false;
            let ratio = if dp.norm() == 0.0 {
                Complex64::new(1e-8, 1e-8)
            } else {
                p / dp
            };
            let s: Complex64 = (0..n)
                .filter(|&k| k != j)
                .map(|k| 1.0 / (z[j] - z[k]))
                .sum();
            z[j] -= ratio / (Complex64::new(1.0, 0.0) - ratio * s);
        }
        if all_small {
            return Ok(z);
        }
    }
    Err(Error::RootFinderNonConvergence(MAX_ITER))
}

/// Replaces every member of a tight cluster of size k (a numerically
/// multiple root) by the simple root of p^{(k−1)} nearest the cluster mean.
fn refine_clusters(coeffs: &[Complex64], ys: &mut [Complex64]) {
    let n = ys.len();
    let mut group: Vec<usize> = (0..n).collect();
    for j in 0..n {
        for k in j + 1..n {
            if (ys[j] - ys[k]).norm() <= 1e-5 * (1.0 + ys[j].norm()) {
                let (gj, gk) = (group[j], group[k]);
                group.iter_mut().filter(|g| **g == gk).for_each(|g| *g = gj);
            }
        }
    }
    for g in 0..n {
        let members: Vec<usize> = (0..n).filter(|&j| group[j] == g).collect();
        if members.len() < 2 {
            continue;
        }
        let mut d = coeffs.to_vec();
        for _ in 1..members.len() {
            d = d.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect();
        }
        let mut y = members.iter().map(|&j| ys[j]).sum::<Complex64>() / members.len() as f64;
        for _ in 0..50 {
            let (p, dp, _) = horner(&d, y);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            y -= step;
            if step.norm() <= f64::EPSILON * y.norm() {
                break;
            }
        }
        members.iter().for_each(|&j| ys[j] = y);
    }
}

/// `coeffs[k]` multiplies x^{2k}; the list must be monic and palindromic.
pub fn palindromic_integral(coeffs: &[f64], m: u64) -> Result<f64> {
    if coeffs.len() < 2 {
        return Err(Error::InvalidArgument("polynomial must have degree >= 1 in x^2".into()));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidArgument("coefficients must be finite".into()));
    }
    let n = coeffs.len() - 1;
    if coeffs[n] != 1.0 {
        return Err(Error::NotMonic);
    }
    let scale = coeffs.iter().fold(0.0f64, |s, c| s.max(c.abs()));
    if (0..=n).any(|k| (coeffs[k] - coeffs[n - k]).abs() > 1e-12 * scale) {
        return Err(Error::NotPalindromic);
    }
    let cc: Vec<Complex64> = coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
    let mut ys = aberth_roots(&cc)?;
    refine_clusters(&cc, &mut ys);
    for y in &ys {
        if y.im.abs() <= 1e-9 * (1.0 + y.norm()) && y.re >= -1e-12 {
            return Err(Error::RealNonNegativeRoot(format!("{y}")));
        }
    }
    // Greedy reciprocal pairing; a root may be its own partner (y = −1).
    let mut paired = vec![false; n];
    for j in 0..n {
        if paired[j] {
            continue;
        }
        let (k, dev) = (0..n)
            .filter(|&k| !paired[k])
            .map(|k| (k, (ys[j] * ys[k] - 1.0).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("j itself is unpaired");
        if dev > PALINDROMIC_PAIR_TOL {
            return Err(Error::ReciprocalPairing(format!("{}", ys[j])));
        }
        paired[j] = true;
        paired[k] = true;
    }
    let mult = m as usize;
    let vars = VarMultiset::complex(ys.iter().map(|y| ((-y).sqrt(), mult)).collect())?;
    let size = vars.total_size();
    let num = Partition::staircase(size - 1);
    let den = Partition::staircase(size);
    let h = homogeneous_syms(&vars, jacobi_trudi_degree(&den));
    let r = schur_from_h_complex(&num, &h) / schur_from_h_complex(&den, &h);
    if r.im.abs() > 1e-9 * r.norm() {
        return Err(Error::ImaginaryResidue {
            residue: r.im.abs() / r.norm(),
            tol: 1e-9,
        });
    }
    Ok(std::f64::consts::FRAC_PI_2 * r.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_semiaxis;
    use std::f64::consts::PI;

    #[test]
    fn aberth_finds_simple_roots() {
        // (y+1)(y+2)(y+3)
        let c: Vec<Complex64> = [6.0, 11.0, 6.0, 1.0].iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let mut r: Vec<f64> = aberth_roots(&c).unwrap().iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        for (got, want) in r.iter().zip([-3.0, -2.0, -1.0]) {
            assert!((got - want).abs() < 1e-13);
        }
    }

    #[test]
    fn theorem_special_case() {
        let v = palindromic_integral(&[1.0, 2.0, 1.0], 2).unwrap();
        assert!((v - 5.0 * PI / 32.0).abs() < 1e-13);
    }

    #[test]
    fn three_factor_product_matches_quadrature() {
        // (x²+4)(x²+1/4)(x²+1)
        let v = palindromic_integral(&[1.0, 5.25, 5.25, 1.0], 1).unwrap();
        let q = integrate_semiaxis(|x| {
            let y = x * x;
            1.0 / ((y + 4.0) * (y + 0.25) * (y + 1.0))
        }, 1e-14)
        .unwrap();
        assert!((v - q.value).abs() < 1e-8 * q.value);
    }

    #[test]
    fn repeated_root() {
        let v = palindromic_integral(&[1.0, 2.0, 1.0], 1).unwrap();
        assert!((v - PI / 4.0).abs() < 1e-12);
    }

    #[test]
    fn complex_pairs() {
        // x⁴ + 2a x² + 1 with |a| < 1 has unit-circle roots in y.
        for &(a, m) in &[(0.3, 1u64), (-0.5, 3), (0.0, 2)] {
            let v = palindromic_integral(&[1.0, 2.0 * a, 1.0], m).unwrap();
            let want = crate::pm::n04_closed_f64(a, m - 1).unwrap();
            assert!(((v - want) / want).abs() < 1e-10, "a={a} m={m}");
        }
    }

    #[test]
    fn errors() {
        assert_eq!(palindromic_integral(&[1.0, 2.0, 2.0], 1), Err(Error::NotMonic));
        assert_eq!(palindromic_integral(&[2.0, 3.0, 1.0], 1), Err(Error::NotPalindromic));
        // x⁴ − 3x² + 1: positive roots in y, so Q vanishes on the real axis.
        assert!(matches!(
            palindromic_integral(&[1.0, -3.0, 1.0], 1),
            Err(Error::RealNonNegativeRoot(_))
        ));
        assert!(palindromic_integral(&[1.0, 1.0], 0).is_err());
    }
}
