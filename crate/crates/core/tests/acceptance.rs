//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the summary is always printed.

use std::f64::consts::{PI, SQRT_2};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use quartic::derivative::{
    formula77_check, n04_form99, n04_form99_exact, n04_form99_variant, parity_relations_check,
    st_polys, Form99, SRelation, StRecurrence,
};
use quartic::exact::{int, rat, to_f64, Rational};
use quartic::harness::{
    cross_validate, default_a_grid, run_suite, CrossConfig, RecurrenceSet, Route, Status, Suite,
    VerifyConfig,
};
use quartic::hypergeom::{verify_hyp0, verify_init, verify_recur11, recur11};
use quartic::pm::{n04_closed, n04_closed_f64, pm_poly, qm_binomial_identity_residual, QmRecurrence};
use quartic::quadrature::integrate_semiaxis;
use quartic::schur::{
    corollary_check, n04_schur_exact, palindromic_integral, schur_eval, staircase_product, Partition,
    VarMultiset,
};
use quartic::schwinger::{formula00_recurrence, verify_formula00};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg.into()) }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn c1_pm_equals_qm() -> Outcome {
    let t = Instant::now();
    let qs = QmRecurrence::stated().sequence(50).map_err(|e| e.to_string())?;
    for (m, q) in qs.iter().enumerate() {
        ensure(q == &pm_poly(m as u64), format!("Q_{m} != P_{m}"))?;
    }
    within(t.elapsed(), Duration::from_secs(10))?;
    Ok(format!("P_m = Q_m exactly for m <= 50 in {:.2?}", t.elapsed()))
}

fn c2_cross_routes() -> Outcome {
    let t = Instant::now();
    let cfg = CrossConfig::default();
    let reports = cross_validate(&default_a_grid(), 0..=8, &Route::ALL, &cfg).map_err(|e| e.to_string())?;
    let mut compared = 0;
    let mut worst: f64 = 0.0;
    for r in &reports {
        ensure(r.passed, format!("a={} m={}: {:?}", r.a, r.m, r.failures))?;
        let closed = r.entries.iter().find(|e| e.route == Route::Closed).and_then(|e| e.numeric).unwrap();
        for e in &r.entries {
            ensure(e.status != Status::Error, format!("a={} m={} {}: {:?}", r.a, r.m, e.route, e.note))?;
            if e.route == Route::Schur && r.m <= 6 {
                ensure(e.status == Status::Ok, format!("schur skipped at a={} m={}", r.a, r.m))?;
            }
            if let Some(v) = e.numeric {
                let tol = if e.route.quadrature_backed() { 1e-7 } else { 1e-9 };
                let d = rel(v, closed);
                worst = worst.max(d);
                ensure(d <= tol, format!("{} at a={} m={}: {d:.3e}", e.route, r.a, r.m))?;
                compared += 1;
            }
        }
    }
    within(t.elapsed(), Duration::from_secs(120))?;
    Ok(format!(
        "{} points, {compared} route values, max deviation {worst:.2e}, {:.2?}",
        reports.len(),
        t.elapsed()
    ))
}

fn c3_spot_values() -> Outcome {
    let cases = [(1.0, 0, PI / 4.0), (0.0, 0, PI / (2.0 * SQRT_2)), (1.0, 1, 5.0 * PI / 32.0)];
    for (a, m, want) in cases {
        let got = n04_closed_f64(a, m).map_err(|e| e.to_string())?;
        ensure(rel(got, want) <= 1e-12, format!("N({a},{m}) = {got}"))?;
    }
    let sym = |a: Rational, m| n04_closed(&a, m, 30).unwrap().symbolic();
    ensure(sym(int(1), 0) == "pi/4", "N(1,0) symbolic")?;
    ensure(sym(int(1), 1) == "5*pi/32", "N(1,1) symbolic")?;
    Ok("N(1,0)=pi/4, N(0,0)=pi/(2*sqrt(2)), N(1,1)=5*pi/32".into())
}

fn c4_recurrence_residuals() -> Outcome {
    let r11 = verify_recur11(20, &[rat(1, 4), rat(1, 3), rat(1, 2)], &recur11()).map_err(|e| e.to_string())?;
    ensure(r11.passed() && r11.max_deviation.is_none(), format!("recur-11: {:?}", r11.failures))?;
    let f00 = verify_formula00(20, &[rat(1, 2), int(2), int(3)], &formula00_recurrence())
        .map_err(|e| e.to_string())?;
    ensure(f00.residual_failures.is_empty(), format!("formula-00: {:?}", f00.residual_failures))?;
    ensure(f00.passed(), "formula-00 base or series check")?;
    let mut binom = 0;
    for m in 0..=30 {
        for k in 0..=m + 1 {
            ensure(qm_binomial_identity_residual(m, k) == 0.into(), format!("binomial m={m} k={k}"))?;
            binom += 1;
        }
    }
    Ok(format!(
        "recur-11 {} residuals, formula-00 {} cases, binomial identity {binom} residuals, all exactly zero",
        r11.cases, f00.cases
    ))
}

fn c5_hypergeometric() -> Outcome {
    let h = verify_hyp0(10, &[0.1, 0.25, 0.4, 0.5], 1e-9).map_err(|e| e.to_string())?;
    ensure(h.passed(), format!("hyp-0: {:?}", h.failures))?;
    let i = verify_init(&[0.1, 0.5, 0.9], 1e-11).map_err(|e| e.to_string())?;
    ensure(i.passed(), format!("init: {:?}", i.failures))?;
    Ok(format!(
        "hyp-0 max deviation {:.2e}; init max deviation {:.2e}",
        h.max_deviation.unwrap_or(0.0),
        i.max_deviation.unwrap_or(0.0)
    ))
}

fn c6_schur() -> Outcome {
    let config = Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let strategy = prop::collection::vec((-9i64..10, 1i64..6, 1usize..4), 1..6).prop_filter(
        "nonzero values, size at most 8",
        |v| v.iter().all(|e| e.0 != 0) && v.iter().map(|e| e.2).sum::<usize>() <= 8,
    );
    runner
        .run(&strategy, |v| {
            let vars = VarMultiset::rational(v.iter().map(|&(n, d, k)| (rat(n, d), k)).collect()).unwrap();
            let n = vars.total_size();
            prop_assert_eq!(schur_eval(&Partition::staircase(n), &vars).unwrap(), staircase_product(&vars));
            Ok(())
        })
        .map_err(|e| format!("staircase identity: {e}"))?;

    let mut worst: f64 = 0.0;
    for a in default_a_grid() {
        for m in 0..=6 {
            let v = n04_schur_exact(&a, m, 20).map_err(|e| e.to_string())?.value();
            let d = rel(v, n04_closed_f64(to_f64(&a), m).unwrap());
            worst = worst.max(d);
            ensure(d <= 1e-9, format!("Schur route a={a} m={m}: {d:.3e}"))?;
        }
    }
    for w in [int(1), int(2), rat(3, 2)] {
        for m in 0..=4 {
            let c = corollary_check(m, &w).map_err(|e| e.to_string())?;
            ensure(c.passed(), format!("corollary m={m} w={w}"))?;
        }
    }
    let v = palindromic_integral(&[1.0, 5.25, 5.25, 1.0], 1).map_err(|e| e.to_string())?;
    let q = integrate_semiaxis(|x| {
        let y = x * x;
        1.0 / ((y + 4.0) * (y + 0.25) * (y + 1.0))
    }, 1e-14)
    .map_err(|e| e.to_string())?;
    ensure(rel(v, q.value) <= 1e-8, format!("palindromic {v} vs {}", q.value))?;
    Ok(format!(
        "staircase identity on 200 random multisets; theorem max deviation {worst:.2e}; corollary exact; palindromic deviation {:.2e}",
        rel(v, q.value)
    ))
}

fn c7_bessel() -> Outcome {
    let recs = RecurrenceSet::default();
    let cfg = VerifyConfig::default();
    let mut msg = Vec::new();
    for s in [Suite::LemmaBes1, Suite::Entry3469] {
        let r = run_suite(s, &cfg, &recs);
        ensure(r.passed, format!("{}: {:?}", r.suite, r.failures))?;
        msg.push(format!("{} max deviation {}", r.suite, r.max_deviation.unwrap_or_default()));
    }
    Ok(msg.join("; "))
}

fn c8_derivative_polys() -> Outcome {
    let pairs = StRecurrence::stated().sequence(5).map_err(|e| e.to_string())?;
    let f77 = formula77_check(&pairs, &[0.5, 1.0, 2.0], 1e-6);
    ensure(f77.passed(), format!("formula-77: {:?}", f77.failures))?;
    let bs = [int(1), rat(-1, 2), int(7), rat(1, 8), int(3), int(2)];
    let par = parity_relations_check(6, &bs, SRelation::Corrected).map_err(|e| e.to_string())?;
    ensure(par.passed(), format!("parity: {:?}", par.failures))?;
    for a in [rat(1, 2), int(1), int(2), int(5)] {
        for m in 0..=8 {
            let exact = n04_form99_exact(&a, m, 20).map_err(|e| e.to_string())?;
            let closed = n04_closed(&a, m, 20).unwrap();
            ensure(exact.pm_at_a == closed.pm_at_a, format!("form-99 exact a={a} m={m}"))?;
            let f = n04_form99(to_f64(&a), m).map_err(|e| e.to_string())?;
            ensure(rel(f, closed.value()) <= 1e-10, format!("form-99 float a={a} m={m}"))?;
        }
    }
    let uncorrected = n04_form99_variant(&int(2), 1, Form99::Uncorrected, &st_polys(1), 20).map_err(|e| e.to_string())?;
    let ratio = uncorrected.pm_at_a / n04_closed(&int(2), 1, 20).unwrap().pm_at_a;
    ensure(ratio != int(1), "uncorrected form-99 unexpectedly agrees at (m=1, a=2)")?;
    Ok(format!(
        "formula-77 max deviation {:.2e}; parity {} cases; form-99 exact; uncorrected form-99 off by factor {ratio}",
        f77.max_deviation.unwrap_or(0.0),
        par.cases
    ))
}

fn c9_cli_contract() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_quartic"))
        .arg("verify")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        out.status.code() == Some(0),
        format!("verify exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout)),
    )?;

    let base = RecurrenceSet::default();
    let mut mutants: Vec<(Suite, String, RecurrenceSet)> = Vec::new();
    let delta = || rat(1, 3);
    for i in 0..3 {
        let mut r = base.clone();
        r.formula00 = r.formula00.perturbed(i, delta());
        mutants.push((Suite::Formula00, format!("formula-00 coefficient {i}"), r));
        let mut r = base.clone();
        r.recur11 = r.recur11.perturbed(i, delta());
        mutants.push((Suite::Recur11, format!("recur-11 coefficient {i}"), r));
    }
    for i in 0..QmRecurrence::LEN {
        let mut r = base.clone();
        r.qm = r.qm.perturbed(i, delta());
        mutants.push((Suite::PmEqQm, format!("Q recurrence coefficient {i}"), r));
    }
    for i in 0..StRecurrence::LEN {
        let mut r = base.clone();
        r.st = r.st.perturbed(i, delta());
        mutants.push((Suite::Parity, format!("S/T recurrence coefficient {i}"), r));
    }
    for (suite, what, recs) in &mutants {
        let argv = ["quartic", "verify", "--suite", suite.id()];
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = quartic::cli::run_with(argv, recs, &mut o, &mut e);
        ensure(code != 0, format!("corrupted {what} went undetected by {}", suite.id()))?;
    }
    Ok(format!("verify exits 0; all {} single-coefficient corruptions exit nonzero", mutants.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 P_m = Q_m for m <= 50", c1_pm_equals_qm),
        ("2 cross-route agreement", c2_cross_routes),
        ("3 spot values", c3_spot_values),
        ("4 exact recurrence residuals", c4_recurrence_residuals),
        ("5 hypergeometric identities", c5_hypergeometric),
        ("6 Schur suite", c6_schur),
        ("7 Bessel suite", c7_bessel),
        ("8 derivative-polynomial suite", c8_derivative_polys),
        ("9 CLI contract", c9_cli_contract),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, f) in criteria {
        if !filter.is_empty() && !filter.iter().any(|p| name.contains(p.as_str())) {
            continue;
        }
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match r {
            Ok(msg) => println!("criterion {name}: PASS ({:.2?}) {msg}", t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({:.2?}) {msg}", t.elapsed());
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
