//! Derivative polynomials: with b = 2/a² − 1,
//!
//! ```text
//! d^m/db^m [(b+1)^{−1/2}(√2+√(b+1))^{−1/2}]
//!     = (−1)^m (S_m + √(b+1)·T_m) / (2^{2m}(b+1)^{m+1/2}(√2+√(b+1))^{m+1/2})
//! ```
//!
//! S_m, T_m ∈ ℚ[√2][b]; their parity split U_m, V_m ∈ ℚ[b] reassembles P_m.

use std::f64::consts::{PI, SQRT_2};

use num_traits::{One, Zero};

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::exact::{
    binomial, factorial, int, pow2, pow_rational, rational_sqrt, to_f64, Poly, Rational,
    RationalPoly, SqrtTwo, SqrtTwoPoly, Var,
};
use crate::pm::{pm_poly, ExactQuarticValue};

pub const VAR_B: Var = Var('b');

#[derive(Clone, Debug, PartialEq)]
pub struct DerivPair {
    pub m: u64,
    pub s: SqrtTwoPoly,
    pub t: SqrtTwoPoly,
}

/// U_m and V_m with the (1+b)^{−m′} prefactor cleared: the true U_m is
/// `u(b)/(1+b)^{m′}`, m′ = ⌊m/2⌋, and likewise for V_m.
#[derive(Clone, Debug, PartialEq)]
pub struct ParityPair {
    pub m: u64,
    pub u: RationalPoly,
    pub v: RationalPoly,
}

impl ParityPair {
    pub fn half(&self) -> u64 {
        self.m / 2
    }

    pub fn eval_u(&self, b: &Rational) -> Rational {
        self.u.eval(b) / pow_rational(&(b + int(1)), self.half())
    }

    pub fn eval_v(&self, b: &Rational) -> Rational {
        self.v.eval(b) / pow_rational(&(b + int(1)), self.half())
    }
}

/// The pair recurrence
///
/// ```text
/// S_{m+1} = κ₀(2m+1)S − (b+1)[κ₁S′ − κ₂(1+6m)T + κ₃(b+1)T′]
/// T_{m+1} = κ₄(2m+1)S + κ₅·m·T − (b+1)(κ₆S′ + κ₇T′)
/// ```
///
/// with κ = (2√2, 4√2, 1, 4, 3, 4√2, 4, 4√2).
#[derive(Clone, Debug, PartialEq)]
pub struct StRecurrence {
    kappa: [SqrtTwo; 8],
}

impl Default for StRecurrence {
    fn default() -> Self {
        StRecurrence::stated()
    }
}

impl StRecurrence {
    pub const LEN: usize = 8;

    pub fn stated() -> Self {
        let r = |n: i64| SqrtTwo::from_rational(int(n));
        let s = |n: i64| SqrtTwo::new(Rational::zero(), int(n));
        StRecurrence {
            kappa: [s(2), s(4), r(1), r(4), r(3), s(4), r(4), s(4)],
        }
    }

    pub fn perturbed(&self, i: usize, delta: Rational) -> Self {
        let mut out = self.clone();
        out.kappa[i] = &out.kappa[i] + &SqrtTwo::from_rational(delta);
        out
    }

    pub fn step(&self, p: &DerivPair) -> Result<DerivPair> {
        let m = p.m;
        let k = |i: usize, f: i64| Poly::constant(self.kappa[i].scale(&int(f)), VAR_B);
        let bp1 = Poly::from_coeffs(vec![SqrtTwo::one(), SqrtTwo::one()], VAR_B);
        let (ds, dt) = (p.s.derivative(), p.t.derivative());
        let two_m1 = 2 * m as i64 + 1;
        let bracket = &(&(&k(1, 1) * &ds) - &(&k(2, 1 + 6 * m as i64) * &p.t))
            + &(&(&k(3, 1) * &bp1) * &dt);
        let s = &(&k(0, two_m1) * &p.s) - &(&bp1 * &bracket);
        let t = &(&(&k(4, two_m1) * &p.s) + &(&k(5, m as i64) * &p.t))
            - &(&bp1 * &(&(&k(6, 1) * &ds) + &(&k(7, 1) * &dt)));
        let m1 = m + 1;
        for (name, q) in [("S", &s), ("T", &t)] {
            if q.degree().is_some_and(|d| d as u64 > m1) {
                return Err(Error::ExactnessViolation(format!(
                    "deg {name}_{m1} = {:?} exceeds {m1}",
                    q.degree()
                )));
            }
        }
        Ok(DerivPair { m: m1, s, t })
    }

    /// (S_0, T_0) = (1, 0) through (S_{m_max}, T_{m_max}).
    pub fn sequence(&self, m_max: u64) -> Result<Vec<DerivPair>> {
        let mut out = vec![DerivPair {
            m: 0,
            s: Poly::constant(SqrtTwo::one(), VAR_B),
            t: Poly::zero(VAR_B),
        }];
        for i in 0..m_max as usize {
            let next = self.step(&out[i])?;
            out.push(next);
        }
        Ok(out)
    }
}

pub fn st_polys(m: u64) -> DerivPair {
    StRecurrence::stated()
        .sequence(m)
        .expect("stated recurrence respects the degree bound")
        .pop()
        .expect("sequence is never empty")
}

/// U_m, V_m from their double sums (prefactor (1+b)^{−m′} cleared).
pub fn uv_polys(m: u64) -> ParityPair {
    let half = m / 2;
    let bp1 = Poly::from_coeffs(vec![int(1), int(1)], VAR_B);
    let mut powers = vec![Poly::constant(int(1), VAR_B)];
    for i in 0..half as usize {
        let next = &powers[i] * &bp1;
        powers.push(next);
    }
    let mut u = Poly::zero(VAR_B);
    let mut v = Poly::zero(VAR_B);
    for k in 0..=m {
        let outer = Rational::from_integer(
            binomial(2 * m - 2 * k, m - k) * binomial(m + k, m),
        ) * pow2(k as i64);
        for j in 0..=k / 2 {
            // j ≤ ⌊k/2⌋ ≤ m′, so (1+b)^{m′−j} is a genuine polynomial.
            assert!(j <= half);
            let p = powers[(half - j) as usize].scale(&(&outer * pow2(j as i64)));
            u = &u + &p.scale(&Rational::from_integer(binomial(k, 2 * j)));
            if 2 * j < k {
                v = &v + &p.scale(&Rational::from_integer(binomial(k, 2 * j + 1)));
            }
        }
    }
    let scale = pow2(-2 * m as i64);
    ParityPair {
        m,
        u: u.scale(&scale),
        v: v.scale(&scale),
    }
}

/// a = √(2/(1+b)) in ℚ[√2] when possible: rational when 2/(1+b) is a
/// rational square, a rational multiple of √2 when 1+b is.
pub fn a_from_b(b: &Rational) -> Option<SqrtTwo> {
    let bp1 = b + int(1);
    if let Some(a) = rational_sqrt(&(int(2) / &bp1)) {
        return Some(SqrtTwo::from_rational(a));
    }
    rational_sqrt(&bp1).map(|s| SqrtTwo::new(Rational::zero(), Rational::one() / s))
}

fn sqrt2_pow(e: i64) -> SqrtTwo {
    let half = pow2(e.div_euclid(2));
    if e.rem_euclid(2) == 0 {
        SqrtTwo::from_rational(half)
    } else {
        SqrtTwo::new(Rational::zero(), half)
    }
}

fn pow_s2(x: &SqrtTwo, e: i64) -> SqrtTwo {
    let base = if e < 0 {
        x.recip().expect("nonzero base")
    } else {
        x.clone()
    };
    (0..e.unsigned_abs()).fold(SqrtTwo::one(), |acc, _| &acc * &base)
}

/// Which S relation to use: the corrected one, or the uncorrected one that
/// carries an extra 1/√2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SRelation {
    Corrected,
    Uncorrected,
}

/// Predicted (S_m(b), T_m(b)) from U_m, V_m at a = √(2/(1+b)):
///
/// ```text
/// T_m = m!·2^{3m/2}/(√2·a^{m−1})·{U_m, m odd | a·V_m, m even}
/// S_m = m!·2^{3m/2}/a^m·{a·V_m, m odd | U_m, m even}
/// ```
pub fn parity_predict(uv: &ParityPair, b: &Rational, a: &SqrtTwo, rel: SRelation) -> (SqrtTwo, SqrtTwo) {
    let m = uv.m;
    let u = SqrtTwo::from_rational(uv.eval_u(b));
    let av = a * &SqrtTwo::from_rational(uv.eval_v(b));
    let fact = SqrtTwo::from_rational(Rational::from_integer(factorial(m)));
    let pre = &fact * &sqrt2_pow(3 * m as i64);
    let odd = m % 2 == 1;
    let t = &(&pre * &sqrt2_pow(-1)) * &pow_s2(a, 1 - m as i64);
    let t = &t * if odd { &u } else { &av };
    let mut s = &(&pre * &pow_s2(a, -(m as i64))) * if odd { &av } else { &u };
    if rel == SRelation::Uncorrected {
        s = &s * &sqrt2_pow(-1);
    }
    (s, t)
}

fn parity_predict_f64(uv: &ParityPair, b: f64, rel: SRelation) -> (f64, f64) {
    let m = uv.m as i32;
    let a = (2.0 / (1.0 + b)).sqrt();
    let bp = (1.0 + b).powi(uv.half() as i32);
    let u = uv.u.eval_f64(b) / bp;
    let av = a * uv.v.eval_f64(b) / bp;
    let pre = to_f64(&Rational::from_integer(factorial(uv.m))) * 2f64.powf(1.5 * m as f64);
    let odd = m % 2 == 1;
    let t = pre / (SQRT_2 * a.powi(m - 1)) * if odd { u } else { av };
    let mut s = pre / a.powi(m) * if odd { av } else { u };
    if rel == SRelation::Uncorrected {
        s /= SQRT_2;
    }
    (s, t)
}

/// Both parity relations for m ≤ m_max at each b > −1: exact in ℚ[√2]
/// when a = √(2/(1+b)) lies there, otherwise to 1e-10 relative.
pub fn parity_relations_check(m_max: u64, bs: &[Rational], rel: SRelation) -> Result<CheckReport> {
    let pairs = StRecurrence::stated().sequence(m_max)?;
    parity_relations_check_with(&pairs, bs, rel)
}

pub fn parity_relations_check_with(pairs: &[DerivPair], bs: &[Rational], rel: SRelation) -> Result<CheckReport> {
    let mut rep = CheckReport::default();
    for b in bs {
        if b <= &int(-1) {
            return Err(Error::InvalidArgument(format!("parity samples need b > -1, got {b}")));
        }
        for st in pairs {
            let m = st.m;
            let uv = uv_polys(m);
            let bq = SqrtTwo::from_rational(b.clone());
            match a_from_b(b) {
                Some(a) => {
                    let (s, t) = parity_predict(&uv, b, &a, rel);
                    rep.exact(st.s.eval(&bq) == s, || format!("S_{m} at b={b}"));
                    rep.exact(st.t.eval(&bq) == t, || format!("T_{m} at b={b}"));
                }
                None => {
                    let bf = to_f64(b);
                    let (s, t) = parity_predict_f64(&uv, bf, rel);
                    rep.close(st.s.eval(&bq).to_f64(), s, 1e-10, || format!("S_{m} at b={b}"));
                    rep.close(st.t.eval(&bq).to_f64(), t, 1e-10, || format!("T_{m} at b={b}"));
                }
            }
        }
    }
    Ok(rep)
}

/// U_m(b) + a·V_m(b) = P_m(a) exactly at rational a > 0.
pub fn uv_reassembly_check(m_max: u64, a_samples: &[Rational]) -> CheckReport {
    let mut rep = CheckReport::default();
    for a in a_samples {
        let b = int(2) / (a * a) - int(1);
        for m in 0..=m_max {
            let uv = uv_polys(m);
            let lhs = uv.eval_u(&b) + a * uv.eval_v(&b);
            rep.exact(lhs == pm_poly(m).eval(a), || format!("U_{m} + aV_{m} at a={a}"));
        }
    }
    rep
}

/// Which numerator the form-99 evaluation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form99 {
    /// √2·T_m + a·S_m
    Corrected,
    /// √2·T_m + S_m, which drops the factor a on S_m
    Uncorrected,
}

/// N = π·a^{m−1}(√2·T_m(b) + a·S_m(b))/(m!·2^{5m/2+3/2}(a+1)^{m+1/2}),
/// b = 2/a² − 1, exact for rational a > 0.
pub fn n04_form99_exact(a: &Rational, m: u64, digits: usize) -> Result<ExactQuarticValue> {
    n04_form99_variant(a, m, Form99::Corrected, &st_polys(m), digits)
}

pub fn n04_form99_variant(
    a: &Rational,
    m: u64,
    form: Form99,
    st: &DerivPair,
    digits: usize,
) -> Result<ExactQuarticValue> {
    if a <= &Rational::zero() {
        return Err(Error::OutOfDomain {
            route: "form99",
            a: a.to_string(),
            reason: "the derivative-polynomial form needs a > 0",
        });
    }
    let b = SqrtTwo::from_rational(int(2) / (a * a) - int(1));
    let aq = SqrtTwo::from_rational(a.clone());
    let s = st.s.eval(&b);
    let s = if form == Form99::Corrected { &aq * &s } else { s };
    let x = &(&SqrtTwo::sqrt2() * &st.t.eval(&b)) + &s;
    // N = π·pm/(2^{m+3/2}(a+1)^{m+1/2})  ⇒  pm = a^{m−1}·X/(m!·2^{3m/2})
    let pm = &(&x * &pow_s2(&aq, m as i64 - 1)) * &sqrt2_pow(-3 * m as i64);
    if !pm.is_rational() {
        return Err(Error::ExactnessViolation(format!(
            "form-99 numerator has irrational part {} at a={a}, m={m}",
            pm.surd
        )));
    }
    let pm_at_a = pm.rat / Rational::from_integer(factorial(m));
    Ok(ExactQuarticValue::new(a.clone(), m, pm_at_a, digits))
}

/// Floating-point evaluation of the corrected form.
pub fn n04_form99(a: f64, m: u64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::OutOfDomain {
            route: "form99",
            a: a.to_string(),
            reason: "the derivative-polynomial form needs a > 0",
        });
    }
    let st = st_polys(m);
    let b = 2.0 / (a * a) - 1.0;
    let x = SQRT_2 * st.t.eval_f64(b) + a * st.s.eval_f64(b);
    let denom = to_f64(&Rational::from_integer(factorial(m)))
        * 2f64.powf(2.5 * m as f64 + 1.5)
        * (a + 1.0).powf(m as f64 + 0.5);
    Ok(PI * a.powi(m as i32 - 1) * x / denom)
}

/// m-th derivative of f at x by central differences of width h,
/// extrapolated in h² (Ridders). Returns (value, error estimate).
pub fn ridders_derivative(f: impl Fn(f64) -> f64, x: f64, m: u64, h0: f64) -> (f64, f64) {
    const CON: f64 = 1.4;
    const NTAB: usize = 12;
    const SAFE: f64 = 2.0;
    let con2 = CON * CON;
    let coeffs: Vec<f64> = (0..=m)
        .map(|i| {
            let c = to_f64(&Rational::from_integer(binomial(m, i)));
            if i % 2 == 0 { c } else { -c }
        })
        .collect();
    let diff = |h: f64| {
        let sum: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * f(x + (m as f64 / 2.0 - i as f64) * h))
            .sum();
        sum / h.powi(m as i32)
    };
    let mut table = vec![vec![0.0; NTAB]; NTAB];
    let mut h = h0;
    table[0][0] = diff(h);
    let mut best = (table[0][0], f64::INFINITY);
    for i in 1..NTAB {
        h /= CON;
        table[0][i] = diff(h);
        let mut fac = con2;
        for j in 1..=i {
            table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            let err = (table[j][i] - table[j - 1][i])
                .abs()
                .max((table[j][i] - table[j - 1][i - 1]).abs());
            if err <= best.1 {
                best = (table[j][i], err);
            }
        }
        if (table[i][i] - table[i - 1][i - 1]).abs() >= SAFE * best.1 {
            break;
        }
    }
    best
}

fn fd_step(b: f64, m: u64) -> f64 {
    // keeps every stencil point inside b > −1
    0.5f64.min(0.8 * 2.0 * (b + 1.0) / m.max(1) as f64)
}

pub fn formula77_f(b: f64) -> f64 {
    let r = (b + 1.0).sqrt();
    1.0 / (r * (SQRT_2 + r).sqrt())
}

/// The right side of the derivative formula from S_m, T_m at real b.
pub fn formula77_rhs(st: &DerivPair, b: f64) -> f64 {
    let r = (b + 1.0).sqrt();
    let m = st.m as f64;
    let sign = if st.m % 2 == 0 { 1.0 } else { -1.0 };
    sign * (st.s.eval_f64(b) + r * st.t.eval_f64(b))
        / (4f64.powf(m) * (b + 1.0).powf(m + 0.5) * (SQRT_2 + r).powf(m + 0.5))
}

/// Derivative formula against Ridders differentiation of f.
pub fn formula77_check(pairs: &[DerivPair], bs: &[f64], tol: f64) -> CheckReport {
    let mut rep = CheckReport::default();
    for &b in bs {
        for st in pairs {
            let want = if st.m == 0 {
                formula77_f(b)
            } else {
                ridders_derivative(formula77_f, b, st.m, fd_step(b, st.m)).0
            };
            rep.close(formula77_rhs(st, b), want, tol, || format!("m={} b={b}", st.m));
        }
    }
    rep
}

/// m-th b-derivative of a^{3/2}/√(1+a), a = √(2/(1+b)), against
/// ((−1)^m m!/2^{2m})·a^{2m+3/2}(1+a)^{−(m+1/2)}·P_m(a).
pub fn proposition_check(m_max: u64, bs: &[f64], tol: f64) -> CheckReport {
    let g = |b: f64| {
        let a = (2.0 / (1.0 + b)).sqrt();
        a.powf(1.5) / (1.0 + a).sqrt()
    };
    let mut rep = CheckReport::default();
    for &b in bs {
        let a = (2.0 / (1.0 + b)).sqrt();
        for m in 0..=m_max {
            let lhs = if m == 0 {
                g(b)
            } else {
                ridders_derivative(g, b, m, fd_step(b, m)).0
            };
            let mf = m as f64;
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign * to_f64(&Rational::from_integer(factorial(m))) / 4f64.powf(mf)
                * a.powf(2.0 * mf + 1.5)
                * (1.0 + a).powf(-(mf + 0.5))
                * pm_poly(m).eval_f64(a);
            rep.close(lhs, rhs, tol, || format!("m={m} b={b}"));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::pm::{n04_closed, n04_closed_f64};

    fn s2(r: i64, s: i64) -> SqrtTwo {
        SqrtTwo::new(int(r), int(s))
    }

    #[test]
    fn st_small_cases() {
        let p0 = st_polys(0);
        assert_eq!(p0.s, Poly::constant(SqrtTwo::one(), VAR_B));
        assert!(p0.t.is_zero());
        let p1 = st_polys(1);
        assert_eq!(p1.s, Poly::constant(s2(0, 2), VAR_B));
        assert_eq!(p1.t, Poly::constant(s2(3, 0), VAR_B));
        for (m, p) in StRecurrence::stated().sequence(10).unwrap().iter().enumerate() {
            assert!(p.s.degree().unwrap_or(0) <= m && p.t.degree().unwrap_or(0) <= m);
        }
    }

    #[test]
    fn uv_small_cases() {
        let p0 = uv_polys(0);
        assert_eq!(p0.u, Poly::constant(int(1), VAR_B));
        assert!(p0.v.is_zero());
        let p1 = uv_polys(1);
        assert_eq!(p1.u, Poly::constant(rat(3, 2), VAR_B));
        assert_eq!(p1.v, Poly::constant(int(1), VAR_B));
        let p2 = uv_polys(2);
        let b = rat(-1, 2);
        assert_eq!(p2.eval_u(&b) + int(2) * p2.eval_v(&b), rat(21 + 60 + 48, 8));
        let samples = [rat(1, 3), int(1), int(2), rat(7, 2)];
        assert!(uv_reassembly_check(12, &samples).passed());
    }

    #[test]
    fn parity_relations() {
        let bs = [int(1), rat(-1, 2), int(7), rat(1, 8), int(3), int(2)];
        let rep = parity_relations_check(6, &bs, SRelation::Corrected).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        // b = 1 gives a = 1: m = 1 odd case is T₁ = 2·U₁ = 3.
        let (s, t) = parity_predict(&uv_polys(1), &int(1), &SqrtTwo::one(), SRelation::Corrected);
        assert_eq!((s, t), (s2(0, 2), s2(3, 0)));
    }

    #[test]
    fn uncorrected_s_relation_fails() {
        let rep = parity_relations_check(3, &[int(1)], SRelation::Uncorrected).unwrap();
        // Only the S cases fail; every T case and S_m with S_m(1) = 0 would hold.
        assert_eq!(rep.failures.len(), 4);
        assert!(rep.failures.iter().all(|f| f.starts_with('S')));
    }

    #[test]
    fn form99_examples() {
        for a in [rat(1, 2), int(1), int(3)] {
            let v = n04_form99_exact(&a, 0, 20).unwrap();
            assert_eq!(v.pm_at_a, int(1));
        }
        assert_eq!(n04_form99_exact(&int(1), 1, 20).unwrap().symbolic(), "5*pi/32");
        for a in [rat(1, 2), int(1), int(2), int(5), rat(7, 3)] {
            for m in 0..=8 {
                assert_eq!(n04_form99_exact(&a, m, 20).unwrap(), n04_closed(&a, m, 20).unwrap());
                let f = n04_form99(to_f64(&a), m).unwrap();
                let want = n04_closed_f64(to_f64(&a), m).unwrap();
                assert!(((f - want) / want).abs() < 1e-10, "a={a} m={m}");
            }
        }
        assert!(n04_form99(0.0, 1).is_err());
        assert!(n04_form99_exact(&rat(-1, 2), 1, 20).is_err());
    }

    #[test]
    fn uncorrected_form99_deviates() {
        let a = int(2);
        let uncorrected = n04_form99_variant(&a, 1, Form99::Uncorrected, &st_polys(1), 20).unwrap();
        let closed = n04_closed(&a, 1, 20).unwrap();
        assert_eq!(&uncorrected.pm_at_a / &closed.pm_at_a, rat(5, 7));
        // At a = 1 the two forms coincide.
        let at_one = n04_form99_variant(&int(1), 1, Form99::Uncorrected, &st_polys(1), 20).unwrap();
        assert_eq!(at_one, n04_closed(&int(1), 1, 20).unwrap());
    }

    #[test]
    fn ridders_on_known_derivatives() {
        let (d, _) = ridders_derivative(f64::exp, 0.3, 3, 0.5);
        assert!((d - 0.3f64.exp()).abs() < 1e-9);
        let (d, _) = ridders_derivative(|x| 1.0 / x, 1.0, 4, 0.4);
        assert!((d - 24.0).abs() < 1e-7 * 24.0);
    }

    #[test]
    fn formula77_against_finite_differences() {
        let pairs = StRecurrence::stated().sequence(5).unwrap();
        let rep = formula77_check(&pairs, &[0.5, 1.0, 2.0], 1e-6);
        assert!(rep.passed(), "{:?}", rep.failures);
        let bad = StRecurrence::stated().perturbed(2, rat(1, 10)).sequence(5).unwrap();
        assert!(!formula77_check(&bad, &[1.0], 1e-6).passed());
    }

    #[test]
    fn proposition_holds() {
        let rep = proposition_check(4, &[0.5, 1.0, 2.0], 1e-6);
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn perturbed_recurrence_breaks_parity() {
        for i in 0..StRecurrence::LEN {
            let pairs = StRecurrence::stated().perturbed(i, rat(1, 7)).sequence(4).unwrap();
            let rep = parity_relations_check_with(&pairs, &[int(1), rat(-1, 2)], SRelation::Corrected).unwrap();
            assert!(!rep.passed(), "kappa {i}");
        }
    }
}
