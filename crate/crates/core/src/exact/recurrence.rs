//! Three-term recurrences c₀(m,z)·a_m + c₁(m,z)·a_{m+1} + c₂(m,z)·a_{m+2} = 0
//! with rational coefficients, checked by exact residuals.

use num_traits::Zero;

use super::Rational;

pub type CoeffFn = fn(u64, &Rational) -> Rational;

/// A recurrence whose coefficients can be perturbed one at a time, so that
/// verification suites can be shown to detect a corrupted coefficient.
#[derive(Clone, Debug)]
pub struct ThreeTermRecurrence {
    pub name: &'static str,
    terms: [CoeffFn; 3],
    offsets: [Rational; 3],
}

impl ThreeTermRecurrence {
    /// `terms[i]` multiplies a_{m+i}.
    pub fn new(name: &'static str, terms: [CoeffFn; 3]) -> Self {
        ThreeTermRecurrence {
            name,
            terms,
            offsets: [Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn coefficient(&self, i: usize, m: u64, z: &Rational) -> Rational {
        (self.terms[i])(m, z) + &self.offsets[i]
    }

    /// Copy with `delta` added to coefficient `i`.
    pub fn perturbed(&self, i: usize, delta: Rational) -> Self {
        let mut out = self.clone();
        out.offsets[i] += delta;
        out
    }

    pub fn is_perturbed(&self) -> bool {
        self.offsets.iter().any(|o| !o.is_zero())
    }

    pub fn residual(&self, m: u64, z: &Rational, window: [&Rational; 3]) -> Rational {
        (0..3).fold(Rational::zero(), |acc, i| {
            acc + self.coefficient(i, m, z) * window[i]
        })
    }

    /// Residuals for every window of `seq`, where `seq[j]` is a_{m0+j}.
    pub fn residuals(&self, m0: u64, z: &Rational, seq: &[Rational]) -> Vec<Rational> {
        seq.windows(3)
            .enumerate()
            .map(|(j, w)| self.residual(m0 + j as u64, z, [&w[0], &w[1], &w[2]]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn fib() -> ThreeTermRecurrence {
        ThreeTermRecurrence::new("fib", [|_, _| int(1), |_, _| int(1), |_, _| int(-1)])
    }

    #[test]
    fn fibonacci_residuals_vanish() {
        let seq: Vec<Rational> = [1, 1, 2, 3, 5, 8, 13].iter().map(|&v| int(v)).collect();
        assert!(fib().residuals(0, &int(0), &seq).iter().all(Zero::is_zero));
    }

    #[test]
    fn perturbation_is_detected() {
        let seq: Vec<Rational> = [1, 1, 2, 3, 5].iter().map(|&v| int(v)).collect();
        for i in 0..3 {
            let r = fib().perturbed(i, int(1));
            assert!(r.is_perturbed());
            assert!(r.residuals(0, &int(0), &seq).iter().all(|x| !x.is_zero()));
        }
    }
}
