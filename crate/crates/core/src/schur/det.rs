use num_complex::Complex64;

use super::Field;

/// Fraction-free (Bareiss) determinant; every division is exact. Rows are
/// swapped when a pivot vanishes. `unit` supplies the field of an empty
/// matrix.
pub fn det_bareiss<T: Field>(mut m: Vec<Vec<T>>, unit: &T) -> T {
    let n = m.len();
    if n == 0 {
        return unit.one_like();
    }
    let mut negate = false;
    let mut prev = unit.one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero_value() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero_value()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return unit.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].times(&m[k][k]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = v.over(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.negated()
    } else {
        d
    }
}

/// Gaussian elimination with partial pivoting.
pub fn det_pivoted(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&a, &b| m[a][k].norm().total_cmp(&m[b][k].norm()))
            .expect("nonempty range");
        if m[p][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k];
        det *= pivot;
        for i in k + 1..n {
            let f = m[i][k] / pivot;
            for j in k + 1..n {
                let t = m[k][j];
                m[i][j] -= f * t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Rational};

    fn r(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|row| row.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(det_bareiss(r(&[&[2, 1], &[7, 4]]), &int(1)), int(1));
        assert_eq!(det_bareiss(r(&[&[0, 1], &[1, 0]]), &int(1)), int(-1));
        assert_eq!(det_bareiss(r(&[&[1, 2], &[2, 4]]), &int(1)), int(0));
        assert_eq!(det_bareiss(Vec::new(), &int(1)), int(1));
        let m = vec![
            vec![rat(1, 2), rat(1, 3), int(0)],
            vec![int(0), int(0), int(5)],
            vec![int(2), int(1), int(1)],
        ];
        // 1/2·(0−5) − 1/3·(0−10) = −5/2 + 10/3
        assert_eq!(det_bareiss(m, &int(1)), rat(5, 6));
    }

    #[test]
    fn pivoted_matches_bareiss() {
        let m = r(&[&[0, 3, 1, 4], &[2, 7, 1, 8], &[3, 1, 4, 1], &[5, 9, 2, 6]]);
        let exact = crate::exact::to_f64(&det_bareiss(m.clone(), &int(1)));
        let c: Vec<Vec<Complex64>> = m
            .iter()
            .map(|row| row.iter().map(|v| Complex64::new(crate::exact::to_f64(v), 0.0)).collect())
            .collect();
        assert!((det_pivoted(c).re - exact).abs() < 1e-10);
    }
}
