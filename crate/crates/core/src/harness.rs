//! Cross-validation of every route on an (a, m) grid and the full set of
//! identity / recurrence suites, with deterministic, serializable reports.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::check::CheckReport;
use crate::derivative::{
    formula77_check, n04_form99_exact, parity_relations_check_with, proposition_check,
    uv_reassembly_check, SRelation, StRecurrence,
};
use crate::error::{Error, Result};
use crate::exact::recurrence::ThreeTermRecurrence;
use crate::exact::{int, parse_rational, rat, to_f64, Rational};
use crate::hypergeom::{
    jacobi_poly_check, n04_2f1, n04_bessel_laplace, n04_bomo_exact, recur11, verify_hyp0,
    verify_init, verify_recur11,
};
use crate::pm::{n04_closed, n04_closed_f64, pm_poly, qm_binomial_identity_residual, QmRecurrence};
use crate::quadrature::{
    entry_3469_lhs, entry_3469_rhs, integral_of_k, laplace_km, n04_direct,
};
use crate::schur::{corollary_check, n04_schur_exact};
use crate::schwinger::{formula00_recurrence, n04_schwinger, verify_formula00};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const QUADRATURE_TOL: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Closed,
    Schwinger,
    Schur,
    TwoF1,
    Bomo,
    Bessel,
    Form99,
    Quadrature,
}

impl Route {
    pub const ALL: [Route; 8] = [
        Route::Closed,
        Route::Schwinger,
        Route::Schur,
        Route::TwoF1,
        Route::Bomo,
        Route::Bessel,
        Route::Form99,
        Route::Quadrature,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Route::Closed => "closed",
            Route::Schwinger => "schwinger",
            Route::Schur => "schur",
            Route::TwoF1 => "2f1",
            Route::Bomo => "bomo",
            Route::Bessel => "bessel",
            Route::Form99 => "form99",
            Route::Quadrature => "quadrature",
        }
    }

    /// Routes whose value comes out of numerical integration.
    pub fn quadrature_backed(self) -> bool {
        matches!(self, Route::Bessel | Route::Quadrature)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown route '{s}'")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossConfig {
    pub tol: f64,
    pub quadrature_tol: f64,
    /// The Schur route is run only up to this m.
    pub schur_m_max: u64,
}

impl Default for CrossConfig {
    fn default() -> Self {
        CrossConfig {
            tol: DEFAULT_TOL,
            quadrature_tol: QUADRATURE_TOL,
            schur_m_max: 6,
        }
    }
}

pub fn default_a_grid() -> Vec<Rational> {
    vec![rat(-9, 10), rat(-1, 2), int(0), rat(1, 2), int(1), int(2), int(5)]
}

/// Comma-separated rationals or decimals; `default` gives the standard grid.
pub fn parse_grid(spec: &str) -> Result<Vec<Rational>> {
    if spec.trim() == "default" {
        return Ok(default_a_grid());
    }
    let grid: Vec<Rational> = spec.split(',').map(parse_rational).collect::<Result<_>>()?;
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty grid".into()));
    }
    Ok(grid)
}

/// Fixed-width scientific rendering used everywhere in reports.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.17e}")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Skipped,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct RouteEntry {
    pub route: Route,
    pub status: Status,
    pub value: Option<String>,
    /// "exact", an absolute error estimate, or absent.
    pub error_estimate: Option<String>,
    /// Why the route was skipped or failed.
    pub note: Option<String>,
    #[serde(skip)]
    pub numeric: Option<f64>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Serialize for Route {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MethodReport {
    pub a: String,
    pub m: u64,
    pub entries: Vec<RouteEntry>,
    pub max_pairwise_deviation: Option<String>,
    pub passed: bool,
    pub failures: Vec<String>,
}

fn entry(route: Route, r: Result<(f64, Option<String>)>, started: Instant) -> RouteEntry {
    let wall_time = started.elapsed();
    match r {
        Ok((v, est)) => RouteEntry {
            route,
            status: Status::Ok,
            value: Some(fmt_num(v)),
            error_estimate: est,
            note: None,
            numeric: Some(v),
            wall_time,
        },
        Err(e) => {
            let skipped = matches!(e, Error::OutOfDomain { .. });
            RouteEntry {
                route,
                status: if skipped { Status::Skipped } else { Status::Error },
                value: None,
                error_estimate: None,
                note: Some(e.to_string()),
                numeric: None,
                wall_time,
            }
        }
    }
}

/// One route at one grid point.
pub fn evaluate_route(route: Route, a: &Rational, m: u64, cfg: &CrossConfig) -> RouteEntry {
    let started = Instant::now();
    let af = to_f64(a);
    let exact = |v: Result<crate::pm::ExactQuarticValue>| v.map(|v| (v.value(), Some("exact".to_string())));
    let r = match route {
        Route::Closed => exact(n04_closed(a, m, 20)),
        Route::Schwinger => n04_schwinger(af, m).map(|v| (v, None)),
        Route::Schur if m > cfg.schur_m_max => Err(Error::OutOfDomain {
            route: "schur",
            a: a.to_string(),
            reason: "Schur route limited by schur_m_max",
        }),
        Route::Schur => exact(n04_schur_exact(a, m, 20)),
        Route::TwoF1 => n04_2f1(af, m).map(|v| (v, None)),
        Route::Bomo => exact(n04_bomo_exact(a, m, 20)),
        Route::Bessel => n04_bessel_laplace(af, m, cfg.tol * 1e-2).map(|v| (v, None)),
        Route::Form99 => exact(n04_form99_exact(a, m, 20)),
        Route::Quadrature => n04_direct(af, m, cfg.tol * 1e-2)
            .map(|q| (q.value, Some(fmt_num(q.abs_error_estimate)))),
    };
    entry(route, r, started)
}

/// Every route at one point; the verdict compares all pairs of evaluated
/// routes, at the looser tolerance when either side is quadrature-backed.
pub fn method_report(a: &Rational, m: u64, routes: &[Route], cfg: &CrossConfig) -> MethodReport {
    let entries: Vec<RouteEntry> = routes.iter().map(|&r| evaluate_route(r, a, m, cfg)).collect();
    let mut failures = Vec::new();
    let mut max_dev: Option<f64> = None;
    for e in &entries {
        if e.status == Status::Error {
            failures.push(format!("{}: {}", e.route, e.note.as_deref().unwrap_or("")));
        }
    }
    let ok: Vec<(Route, f64)> = entries.iter().filter_map(|e| e.numeric.map(|v| (e.route, v))).collect();
    for (i, &(r1, v1)) in ok.iter().enumerate() {
        for &(r2, v2) in &ok[i + 1..] {
            let dev = ((v1 - v2) / v2).abs();
            let dev = if dev.is_nan() { f64::INFINITY } else { dev };
            max_dev = Some(max_dev.map_or(dev, |d| d.max(dev)));
            let tol = if r1.quadrature_backed() || r2.quadrature_backed() {
                cfg.quadrature_tol
            } else {
                cfg.tol
            };
            if !(dev <= tol) {
                failures.push(format!("{r1} vs {r2}: relative deviation {dev:.3e} > {tol:.0e}"));
            }
        }
    }
    MethodReport {
        a: a.to_string(),
        m,
        entries,
        max_pairwise_deviation: max_dev.map(fmt_num),
        passed: failures.is_empty(),
        failures,
    }
}

pub fn cross_validate(
    grid: &[Rational],
    m_range: std::ops::RangeInclusive<u64>,
    routes: &[Route],
    cfg: &CrossConfig,
) -> Result<Vec<MethodReport>> {
    if routes.is_empty() {
        return Err(Error::InvalidArgument("no routes selected".into()));
    }
    if let Some(a) = grid.iter().find(|a| **a <= int(-1)) {
        return Err(Error::DivergentIntegral(a.to_string()));
    }
    let mut routes = routes.to_vec();
    routes.sort();
    routes.dedup();
    let points: Vec<(Rational, u64)> = grid
        .iter()
        .flat_map(|a| m_range.clone().map(move |m| (a.clone(), m)))
        .collect();
    // par_iter keeps input order on collect, so reports come out in grid order.
    Ok(points
        .par_iter()
        .map(|(a, m)| method_report(a, *m, &routes, cfg))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Formula00,
    Recur11,
    Hyp0,
    Init,
    Corollary,
    Parity,
    Formula77,
    LemmaBes1,
    Entry3469,
    PmEqQm,
    Jacobi,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Formula00,
        Suite::Recur11,
        Suite::Hyp0,
        Suite::Init,
        Suite::Corollary,
        Suite::Parity,
        Suite::Formula77,
        Suite::LemmaBes1,
        Suite::Entry3469,
        Suite::PmEqQm,
        Suite::Jacobi,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Formula00 => "formula-00",
            Suite::Recur11 => "recur-11",
            Suite::Hyp0 => "hyp-0",
            Suite::Init => "init",
            Suite::Corollary => "corollary",
            Suite::Parity => "parity",
            Suite::Formula77 => "formula-77",
            Suite::LemmaBes1 => "lemma-bes1",
            Suite::Entry3469 => "entry-3.469.1",
            Suite::PmEqQm => "pm-eq-qm",
            Suite::Jacobi => "jacobi",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

/// The recurrences the suites verify; tests swap in corrupted copies.
#[derive(Clone, Debug)]
pub struct RecurrenceSet {
    pub formula00: ThreeTermRecurrence,
    pub recur11: ThreeTermRecurrence,
    pub qm: QmRecurrence,
    pub st: StRecurrence,
}

impl Default for RecurrenceSet {
    fn default() -> Self {
        RecurrenceSet {
            formula00: formula00_recurrence(),
            recur11: recur11(),
            qm: QmRecurrence::stated(),
            st: StRecurrence::stated(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    /// m ≤ this for the exact recurrence suites.
    pub exact_depth: u64,
    pub pm_qm_depth: u64,
    pub binomial_depth: u64,
    pub corollary_depth: u64,
    pub hyp0_depth: u64,
    pub parity_depth: u64,
    pub formula77_depth: u64,
    pub proposition_depth: u64,
    pub bessel_depth: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exact_depth: 20,
            pm_qm_depth: 50,
            binomial_depth: 30,
            corollary_depth: 4,
            hyp0_depth: 10,
            parity_depth: 6,
            formula77_depth: 5,
            proposition_depth: 4,
            bessel_depth: 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySuiteResult {
    pub suite: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Exact suites: whether every residual/comparison was exactly zero.
    pub all_exact_zero: Option<bool>,
    /// Numerical suites: largest relative deviation.
    pub max_deviation: Option<String>,
    pub passed: bool,
}

impl VerifySuiteResult {
    /// `exact_zero` overrides the flag for suites mixing exact and numerical parts.
    fn from_check(suite: Suite, rep: Result<CheckReport>, exact_zero: Option<bool>) -> Self {
        let rep = rep.unwrap_or_else(|e| {
            let mut r = CheckReport::default();
            r.error(e.to_string());
            r
        });
        let exact = rep.max_deviation.is_none();
        VerifySuiteResult {
            suite: suite.id(),
            cases: rep.cases,
            all_exact_zero: exact_zero.or_else(|| exact.then(|| rep.passed())),
            max_deviation: rep.max_deviation.map(fmt_num),
            passed: rep.passed(),
            failures: rep.failures,
        }
    }
}

/// Exact residuals and base values plus the numerical series comparison;
/// the flag says whether the exact part came out exactly zero.
fn formula00_suite(depth: u64, rec: &ThreeTermRecurrence) -> Result<(CheckReport, bool)> {
    let rep = verify_formula00(depth, &[rat(1, 2), int(2), int(3)], rec)?;
    let series_ran = rep.series_skipped.len() < 3;
    let mut out = CheckReport {
        cases: rep.cases,
        failures: Vec::new(),
        max_deviation: series_ran.then_some(rep.max_series_deviation),
    };
    out.failures.extend(rep.residual_failures.iter().map(|(m, z)| format!("{} residual at m={m} z={z}", rec.name)));
    out.failures.extend(rep.base_failures.iter().map(|(m, z)| format!("base value at m={m} z={z}")));
    out.failures.extend(
        rep.series_failures
            .iter()
            .map(|(m, z, d)| format!("series at m={m} z={z} (relative deviation {d:.3e})")),
    );
    Ok((out, rep.residual_failures.is_empty() && rep.base_failures.is_empty()))
}

fn bessel_suite(depth: u64) -> Result<CheckReport> {
    let mut rep = CheckReport::default();
    let q = laplace_km(0, 0.0, 1e-12)?;
    rep.close(q.value, integral_of_k(0.25), 1e-10, || "integral of K_1/4".into());
    // a = 1 gives b = 1: (π/2)·a^{3/2}/√(1+a)
    let q = laplace_km(0, 1.0, 1e-12)?;
    rep.close(q.value, PI / (2.0 * 2f64.sqrt()), 1e-10, || "laplace transform at a=1".into());
    for a in [0.5, 1.0, std::f64::consts::SQRT_2, 2.0] {
        for m in 0..=depth {
            let want = n04_closed_f64(a, m)?;
            match n04_bessel_laplace(a, m, 1e-11) {
                Ok(v) => rep.close(v, want, 1e-8, || format!("a={a} m={m}")),
                Err(e) => rep.error(format!("a={a} m={m}: {e}")),
            }
        }
    }
    Ok(rep)
}

fn entry3469_suite() -> Result<CheckReport> {
    let mut rep = CheckReport::default();
    for (mu, nu) in [(1.0, 1.0), (2.0, 1.0), (1.0, 0.5)] {
        let lhs = entry_3469_lhs(mu, nu, 1e-12)?.value;
        let rhs = entry_3469_rhs(mu, nu, 1e-13)?;
        rep.close(lhs, rhs, 1e-8, || format!("mu={mu} nu={nu}"));
    }
    Ok(rep)
}

fn pm_qm_suite(cfg: &VerifyConfig, rec: &QmRecurrence) -> Result<CheckReport> {
    let mut rep = CheckReport::default();
    for (m, q) in rec.sequence(cfg.pm_qm_depth)?.iter().enumerate() {
        rep.exact(q == &pm_poly(m as u64), || format!("Q_{m} != P_{m}"));
    }
    for m in 0..=cfg.binomial_depth {
        for k in 0..=m + 1 {
            let r = qm_binomial_identity_residual(m, k);
            rep.exact(r == 0.into(), || format!("binomial identity residual {r} at m={m} k={k}"));
        }
    }
    Ok(rep)
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig, recs: &RecurrenceSet) -> VerifySuiteResult {
    let exact_samples = [rat(-1, 2), int(0), rat(1, 3), int(2), int(7)];
    if suite == Suite::Formula00 {
        return match formula00_suite(cfg.exact_depth, &recs.formula00) {
            Ok((rep, exact_zero)) => VerifySuiteResult::from_check(suite, Ok(rep), Some(exact_zero)),
            Err(e) => VerifySuiteResult::from_check(suite, Err(e), Some(false)),
        };
    }
    let rep = match suite {
        Suite::Formula00 => unreachable!("handled above"),
        Suite::Recur11 => verify_recur11(cfg.exact_depth, &[rat(1, 4), rat(1, 3), rat(1, 2)], &recs.recur11),
        Suite::Hyp0 => verify_hyp0(cfg.hyp0_depth, &[0.1, 0.25, 0.4, 0.5], 1e-9),
        Suite::Init => verify_init(&[0.1, 0.5, 0.9], 1e-11),
        Suite::Corollary => (|| {
            let mut rep = CheckReport::default();
            for w in [int(1), int(2), rat(3, 2)] {
                for m in 0..=cfg.corollary_depth {
                    let c = corollary_check(m, &w)?;
                    rep.exact(c.passed(), || format!("m={m} w={w}: {} != {}", c.lhs, c.rhs));
                }
            }
            Ok(rep)
        })(),
        Suite::Parity => (|| {
            let pairs = recs.st.sequence(cfg.parity_depth)?;
            let bs = [int(1), rat(-1, 2), int(7), rat(1, 8), int(3)];
            let mut rep = parity_relations_check_with(&pairs, &bs, SRelation::Corrected)?;
            rep.merge(uv_reassembly_check(cfg.parity_depth, &[rat(1, 2), int(1), int(2), rat(7, 3)]));
            Ok(rep)
        })(),
        Suite::Formula77 => (|| {
            let pairs = recs.st.sequence(cfg.formula77_depth)?;
            let bs = [0.5, 1.0, 2.0];
            let mut rep = formula77_check(&pairs, &bs, 1e-6);
            rep.merge(proposition_check(cfg.proposition_depth, &bs, 1e-6));
            Ok(rep)
        })(),
        Suite::LemmaBes1 => bessel_suite(cfg.bessel_depth),
        Suite::Entry3469 => entry3469_suite(),
        Suite::PmEqQm => pm_qm_suite(cfg, &recs.qm),
        Suite::Jacobi => (|| {
            let mut rep = CheckReport::default();
            for m in 0..=cfg.exact_depth {
                rep.merge(jacobi_poly_check(m, &exact_samples)?);
            }
            Ok(rep)
        })(),
    };
    VerifySuiteResult::from_check(suite, rep, None)
}

pub fn verify_all(suites: &[Suite], cfg: &VerifyConfig, recs: &RecurrenceSet) -> Vec<VerifySuiteResult> {
    suites.par_iter().map(|&s| run_suite(s, cfg, recs)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub version: &'static str,
    pub config: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub meta: Meta,
    pub reports: Vec<MethodReport>,
    pub suites: Vec<VerifySuiteResult>,
}

impl Document {
    pub fn new(config: serde_json::Value, reports: Vec<MethodReport>, suites: Vec<VerifySuiteResult>) -> Self {
        Document {
            meta: Meta {
                version: env!("CARGO_PKG_VERSION"),
                config,
            },
            reports,
            suites,
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed) && self.suites.iter().all(|s| s.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
