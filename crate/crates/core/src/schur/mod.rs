//! Schur functions at multisets of points via Jacobi–Trudi, and the
//! Schur-ratio evaluation of the quartic integral.

mod det;
mod palindromic;
mod quartic;

pub use det::{det_bareiss, det_pivoted};
pub use palindromic::{aberth_roots, palindromic_integral, PALINDROMIC_PAIR_TOL};
pub use quartic::{
    corollary_check, corollary_rhs, n04_schur, n04_schur_exact, n04_schur_pivoted, schur_ratio_exact,
    CorollaryReport,
};

use std::fmt::Debug;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Quadratic, Rational};

/// The arithmetic the determinant and symmetric-function code needs. Method
/// names avoid clashing with `std::ops`.
pub trait Field: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    /// Panics on division by zero; callers check pivots first.
    fn over(&self, o: &Self) -> Self;
    fn negated(&self) -> Self {
        self.zero_like().minus(self)
    }
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn over(&self, o: &Self) -> Self {
        self / o
    }
}

impl Field for Quadratic {
    fn zero_like(&self) -> Self {
        Quadratic::from_rational(Rational::zero(), &self.radicand)
    }
    fn one_like(&self) -> Self {
        Quadratic::from_rational(Rational::one(), &self.radicand)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn over(&self, o: &Self) -> Self {
        self.checked_div(o).expect("division by zero in Q(sqrt d)")
    }
}

impl Field for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::zero()
    }
    fn one_like(&self) -> Self {
        Complex64::one()
    }
    fn is_zero_value(&self) -> bool {
        self.norm() == 0.0
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn over(&self, o: &Self) -> Self {
        self / o
    }
}

/// Weakly decreasing parts, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// λ(n) = (n−1, n−2, …, 1); empty for n ≤ 1.
    pub fn staircase(n: usize) -> Self {
        Partition {
            parts: (1..n).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Evaluation points with multiplicities. Carries its own unit so that empty
/// multisets over ℚ(√d) still know their field.
#[derive(Clone, Debug, PartialEq)]
pub struct VarMultiset<T> {
    entries: Vec<(T, usize)>,
    one: T,
}

impl<T: Field> VarMultiset<T> {
    pub fn with_unit(entries: Vec<(T, usize)>, one: T) -> Result<Self> {
        if entries.iter().any(|(v, _)| v.is_zero_value()) {
            return Err(Error::InvalidArgument("multiset values must be nonzero".into()));
        }
        Ok(VarMultiset { entries, one })
    }

    pub fn entries(&self) -> &[(T, usize)] {
        &self.entries
    }

    pub fn total_size(&self) -> usize {
        self.entries.iter().map(|(_, k)| k).sum()
    }

    pub fn unit(&self) -> &T {
        &self.one
    }
}

impl VarMultiset<Rational> {
    pub fn rational(entries: Vec<(Rational, usize)>) -> Result<Self> {
        VarMultiset::with_unit(entries, Rational::one())
    }
}

impl VarMultiset<Complex64> {
    pub fn complex(entries: Vec<(Complex64, usize)>) -> Result<Self> {
        VarMultiset::with_unit(entries, Complex64::one())
    }
}

/// h_0, …, h_{k_max}, absorbing one variable at a time:
/// h'_k = h_k + x·h'_{k−1}.
pub fn homogeneous_syms<T: Field>(vars: &VarMultiset<T>, k_max: usize) -> Vec<T> {
    let zero = vars.one.zero_like();
    let mut h = vec![zero; k_max + 1];
    h[0] = vars.one.clone();
    for (x, mult) in &vars.entries {
        for _ in 0..*mult {
            for k in 1..=k_max {
                h[k] = h[k].plus(&x.times(&h[k - 1]));
            }
        }
    }
    h
}

/// h_k for `pairs` copies of {w, 1/w}, given only c = w + 1/w: each pair
/// multiplies the generating function by 1/(1 − c t + t²).
pub fn homogeneous_syms_reciprocal<T: Field>(c: &T, pairs: usize, k_max: usize) -> Vec<T> {
    let zero = c.zero_like();
    let mut h = vec![zero.clone(); k_max + 1];
    h[0] = c.one_like();
    for _ in 0..pairs {
        for k in 1..=k_max {
            let prev2 = if k >= 2 { h[k - 2].clone() } else { zero.clone() };
            h[k] = h[k].plus(&c.times(&h[k - 1])).minus(&prev2);
        }
    }
    h
}

/// Largest h index the Jacobi–Trudi matrix of λ touches.
pub fn jacobi_trudi_degree(lambda: &Partition) -> usize {
    lambda.parts.first().map_or(0, |&p| p + lambda.len() - 1)
}

/// det(h_{λ_i − i + j}) from a precomputed h sequence.
pub fn jacobi_trudi_matrix<T: Field>(lambda: &Partition, h: &[T]) -> Vec<Vec<T>> {
    let l = lambda.len();
    let zero = h[0].zero_like();
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda.parts[i] as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        zero.clone()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// s_λ from h_0.. by fraction-free elimination (exact fields).
pub fn schur_from_h<T: Field>(lambda: &Partition, h: &[T]) -> T {
    det_bareiss(jacobi_trudi_matrix(lambda, h), &h[0])
}

/// s_λ from h_0.. by partial pivoting (floating point).
pub fn schur_from_h_complex(lambda: &Partition, h: &[Complex64]) -> Complex64 {
    det_pivoted(jacobi_trudi_matrix(lambda, h))
}

fn check_length<T: Field>(lambda: &Partition, vars: &VarMultiset<T>) -> Result<()> {
    if lambda.len() > vars.total_size() {
        Err(Error::InvalidArgument(format!(
            "partition of length {} needs at least that many variables, got {}",
            lambda.len(),
            vars.total_size()
        )))
    } else {
        Ok(())
    }
}

/// s_λ at an exact multiset.
pub fn schur_eval<T: Field>(lambda: &Partition, vars: &VarMultiset<T>) -> Result<T> {
    check_length(lambda, vars)?;
    let h = homogeneous_syms(vars, jacobi_trudi_degree(lambda));
    Ok(schur_from_h(lambda, &h))
}

/// s_λ at a complex multiset.
pub fn schur_eval_complex(lambda: &Partition, vars: &VarMultiset<Complex64>) -> Result<Complex64> {
    check_length(lambda, vars)?;
    let h = homogeneous_syms(vars, jacobi_trudi_degree(lambda));
    Ok(schur_from_h_complex(lambda, &h))
}

/// ∏_{i<j} (x_i + x_j) over the expanded multiset, which equals s_{λ(n)}.
pub fn staircase_product<T: Field>(vars: &VarMultiset<T>) -> T {
    let mut acc = vars.one.clone();
    let pow = |x: &T, e: usize| (0..e).fold(vars.one.clone(), |p, _| p.times(x));
    for (i, (x, mx)) in vars.entries.iter().enumerate() {
        let double = x.plus(x);
        acc = acc.times(&pow(&double, mx * mx.saturating_sub(1) / 2));
        for (y, my) in &vars.entries[i + 1..] {
            acc = acc.times(&pow(&x.plus(y), mx * my));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn ones(n: usize) -> VarMultiset<Rational> {
        VarMultiset::rational(vec![(int(1), n)]).unwrap()
    }

    #[test]
    fn homogeneous_examples() {
        let v = VarMultiset::rational(vec![(int(2), 1), (int(3), 1)]).unwrap();
        assert_eq!(homogeneous_syms(&v, 2), vec![int(1), int(5), int(19)]);
        assert_eq!(homogeneous_syms(&ones(4), 2), vec![int(1), int(4), int(10)]);
        let e = VarMultiset::rational(vec![]).unwrap();
        assert_eq!(homogeneous_syms(&e, 3), vec![int(1), int(0), int(0), int(0)]);
    }

    #[test]
    fn reciprocal_update_matches_direct() {
        let w = rat(3, 2);
        let v = VarMultiset::rational(vec![(w.clone(), 3), (int(1) / &w, 3)]).unwrap();
        let c = &w + int(1) / &w;
        assert_eq!(homogeneous_syms(&v, 9), homogeneous_syms_reciprocal(&c, 3, 9));
    }

    #[test]
    fn schur_examples() {
        let v = VarMultiset::rational(vec![(int(2), 1), (int(3), 1)]).unwrap();
        assert_eq!(schur_eval(&Partition::new(vec![1]).unwrap(), &v).unwrap(), int(5));
        let p21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(schur_eval(&p21, &ones(4)).unwrap(), int(20));
        assert_eq!(schur_eval(&Partition::staircase(4), &ones(4)).unwrap(), int(64));
        assert_eq!(schur_eval(&Partition::staircase(1), &v).unwrap(), int(1));
        assert!(schur_eval(&Partition::staircase(5), &v).is_err());
    }

    #[test]
    fn staircase_examples() {
        let v = VarMultiset::rational(vec![(int(2), 1), (int(3), 1)]).unwrap();
        assert_eq!(staircase_product(&v), int(5));
        assert_eq!(staircase_product(&ones(4)), int(64));
        let v = VarMultiset::rational(vec![(int(2), 2), (rat(1, 2), 2)]).unwrap();
        assert_eq!(staircase_product(&v), rat(625, 4));
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::staircase(4).parts(), &[3, 2, 1]);
        assert!(Partition::staircase(0).is_empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().len(), 2);
        assert_eq!(Partition::staircase(5).size(), 10);
    }

    #[test]
    fn zero_values_rejected() {
        assert!(VarMultiset::rational(vec![(int(0), 1)]).is_err());
    }

    fn weyl_dimension(lambda: &[usize], n: usize) -> Rational {
        let l = |i: usize| *lambda.get(i).unwrap_or(&0) as i64;
        let mut acc = int(1);
        for i in 0..n {
            for j in i + 1..n {
                acc = acc * int(l(i) - l(j) + (j - i) as i64) / int((j - i) as i64);
            }
        }
        acc
    }

    #[test]
    fn weyl_dimension_formula() {
        for n in 1..=6 {
            for parts in [vec![], vec![1], vec![2, 1], vec![3, 3, 1], vec![4, 2, 2, 1], vec![2, 2, 2, 2, 2, 1]] {
                if parts.len() > n {
                    continue;
                }
                let p = Partition::new(parts.clone()).unwrap();
                assert_eq!(schur_eval(&p, &ones(n)).unwrap(), weyl_dimension(&parts, n));
            }
        }
    }

    #[test]
    fn complex_path_agrees_with_exact() {
        let p = Partition::staircase(5);
        let exact = schur_eval(
            &p,
            &VarMultiset::rational(vec![(rat(1, 3), 2), (int(2), 1), (rat(-5, 4), 1)]).unwrap(),
        )
        .unwrap();
        let cv = VarMultiset::complex(vec![
            (Complex64::new(1.0 / 3.0, 0.0), 2),
            (Complex64::new(2.0, 0.0), 1),
            (Complex64::new(-1.25, 0.0), 1),
        ])
        .unwrap();
        let f = schur_eval_complex(&p, &cv).unwrap();
        let e = crate::exact::to_f64(&exact);
        assert!((f.re - e).abs() < 1e-12 * e.abs() && f.im.abs() < 1e-12);
    }

    fn multiset() -> impl Strategy<Value = Vec<(i64, i64, usize)>> {
        prop::collection::vec((-9i64..10, 1i64..6, 1usize..3), 1..5).prop_filter(
            "values nonzero, size at most 8",
            |v| v.iter().all(|e| e.0 != 0) && v.iter().map(|e| e.2).sum::<usize>() <= 8,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn staircase_identity(v in multiset()) {
            let vars = VarMultiset::rational(v.iter().map(|&(n, d, k)| (rat(n, d), k)).collect()).unwrap();
            let n = vars.total_size();
            prop_assert_eq!(schur_eval(&Partition::staircase(n), &vars).unwrap(), staircase_product(&vars));
        }

        #[test]
        fn symmetric_under_permutation(v in multiset(), seed in 0usize..24) {
            let entries: Vec<(Rational, usize)> = v.iter().map(|&(n, d, k)| (rat(n, d), k)).collect();
            let mut shuffled = entries.clone();
            shuffled.rotate_left(seed % entries.len());
            shuffled.reverse();
            let p = Partition::new(vec![3, 1, 1]).unwrap();
            let a = VarMultiset::rational(entries).unwrap();
            let b = VarMultiset::rational(shuffled).unwrap();
            prop_assume!(a.total_size() >= 3);
            prop_assert_eq!(schur_eval(&p, &a).unwrap(), schur_eval(&p, &b).unwrap());
        }
    }
}
