//! Command-line front end. Exit codes: 0 all verdicts pass, 1 a computation
//! or verdict failed, 2 malformed arguments.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::derivative::n04_form99_exact;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, to_f64, Rational};
use crate::harness::{
    cross_validate, evaluate_route, fmt_num, parse_grid, CrossConfig, Document, RecurrenceSet,
    Route, Status, Suite, VerifyConfig, verify_all,
};
use crate::hypergeom::n04_bomo_exact;
use crate::pm::{n04_closed, pm_poly, pm_shifted, DEFAULT_DIGITS};
use crate::schur::{n04_schur_exact, palindromic_integral};

/// Overrides the default number of digits printed by `eval`.
pub const DIGITS_ENV: &str = "QUARTIC_DIGITS";

#[derive(Parser, Debug)]
#[command(name = "quartic", version, about = "Evaluate and cross-check ∫₀^∞ dx/(x⁴+2ax²+1)^(m+1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate N(a; m) by one route.
    Eval {
        /// a > -1, as a rational (3/2) or decimal (1.5).
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        m: u64,
        /// closed, schwinger, schur, 2f1, bomo, bessel, form99 or quadrature.
        #[arg(long, default_value = "closed")]
        method: String,
        /// Significant digits of the decimal value for exact routes.
        #[arg(long)]
        digits: Option<usize>,
    },
    /// Run routes on an (a, m) grid and compare them pairwise.
    CrossValidate {
        /// Comma-separated a values, or "default".
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 8)]
        mmax: u64,
        /// Comma-separated routes; all by default.
        #[arg(long)]
        routes: Option<String>,
        #[arg(long, default_value_t = crate::harness::DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the identity and recurrence suites.
    Verify {
        /// One suite id; all suites by default.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print P_m coefficients as CSV, in powers of a and of (a+1).
    Table {
        #[arg(long)]
        mmax: u64,
    },
    /// ∫₀^∞ dx/Q(x)^m for an even palindromic Q.
    Palindromic {
        /// Coefficients of Q in powers of x², constant first.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        m: u64,
    },
}

/// Argument problems (exit 2) versus computational failures (exit 1).
enum Failure {
    Usage(Error),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn default_digits() -> usize {
    std::env::var(DIGITS_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_DIGITS)
}

fn write_json(path: &PathBuf, doc: &Document) -> Result<()> {
    std::fs::write(path, doc.to_json())
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

fn eval(out: &mut dyn Write, a: &str, m: u64, method: &str, digits: Option<usize>) -> Outcome {
    let a: Rational = parse_rational(a).map_err(Failure::Usage)?;
    let route: Route = method.parse().map_err(Failure::Usage)?;
    let digits = digits.unwrap_or_else(default_digits);
    let exact = match route {
        Route::Closed => Some(n04_closed(&a, m, digits)?),
        Route::Bomo => Some(n04_bomo_exact(&a, m, digits)?),
        Route::Schur => Some(n04_schur_exact(&a, m, digits)?),
        Route::Form99 => Some(n04_form99_exact(&a, m, digits)?),
        _ => None,
    };
    if let Some(v) = exact {
        let _ = writeln!(out, "{} ≈ {}", v.symbolic(), v.rendered);
        return Ok(true);
    }
    let e = evaluate_route(route, &a, m, &CrossConfig::default());
    match e.status {
        Status::Ok => {
            let est = e.error_estimate.map(|s| format!(" (± {s})")).unwrap_or_default();
            let _ = writeln!(out, "{}{est}", e.value.unwrap_or_default());
            Ok(true)
        }
        _ => Err(Failure::Compute(Error::InvalidArgument(e.note.unwrap_or_default()))),
    }
}

fn parse_routes(s: Option<&str>) -> Result<Vec<Route>> {
    match s {
        None => Ok(Route::ALL.to_vec()),
        Some(s) => s.split(',').map(|r| r.trim().parse()).collect(),
    }
}

fn cross(
    out: &mut dyn Write,
    grid: &str,
    mmax: u64,
    routes: Option<&str>,
    tol: f64,
    json: Option<&PathBuf>,
) -> Outcome {
    let grid = parse_grid(grid).map_err(Failure::Usage)?;
    let routes = parse_routes(routes).map_err(Failure::Usage)?;
    let cfg = CrossConfig {
        tol,
        ..CrossConfig::default()
    };
    let reports = cross_validate(&grid, 0..=mmax, &routes, &cfg)?;
    for r in &reports {
        let verdict = if r.passed { "pass" } else { "FAIL" };
        let skipped: Vec<&str> = r
            .entries
            .iter()
            .filter(|e| e.status == Status::Skipped)
            .map(|e| e.route.id())
            .collect();
        let _ = writeln!(
            out,
            "a={} m={} {verdict} max_dev={} skipped=[{}]",
            r.a,
            r.m,
            r.max_pairwise_deviation.as_deref().unwrap_or("-"),
            skipped.join(",")
        );
        for f in &r.failures {
            let _ = writeln!(out, "  {f}");
        }
    }
    let doc = Document::new(
        json!({
            "command": "cross-validate",
            "grid": grid.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            "mmax": mmax,
            "routes": routes.iter().map(|r| r.id()).collect::<Vec<_>>(),
            "tol": fmt_num(cfg.tol),
            "quadrature_tol": fmt_num(cfg.quadrature_tol),
            "schur_m_max": cfg.schur_m_max,
        }),
        reports,
        Vec::new(),
    );
    if let Some(p) = json {
        write_json(p, &doc)?;
    }
    Ok(doc.passed())
}

fn verify(out: &mut dyn Write, suite: Option<&str>, json: Option<&PathBuf>, recs: &RecurrenceSet) -> Outcome {
    let suites: Vec<Suite> = match suite {
        Some(s) => vec![s.parse().map_err(Failure::Usage)?],
        None => Suite::ALL.to_vec(),
    };
    let cfg = VerifyConfig::default();
    let results = verify_all(&suites, &cfg, recs);
    for r in &results {
        let mut detail = Vec::new();
        if let Some(z) = r.all_exact_zero {
            detail.push(format!("exact_zero={z}"));
        }
        if let Some(d) = &r.max_deviation {
            detail.push(format!("max_dev={d}"));
        }
        let detail = detail.join(" ");
        let verdict = if r.passed { "pass" } else { "FAIL" };
        let _ = writeln!(out, "{} {verdict} cases={} {detail}", r.suite, r.cases);
        for f in &r.failures {
            let _ = writeln!(out, "  {f}");
        }
    }
    let doc = Document::new(
        json!({
            "command": "verify",
            "suites": suites.iter().map(|s| s.id()).collect::<Vec<_>>(),
            "depths": cfg,
        }),
        Vec::new(),
        results,
    );
    if let Some(p) = json {
        write_json(p, &doc)?;
    }
    Ok(doc.passed())
}

fn table(out: &mut dyn Write, mmax: u64) {
    let _ = writeln!(out, "basis,m,coefficients");
    for (basis, poly) in [("monomial", pm_poly as fn(u64) -> _), ("shifted", pm_shifted)] {
        for m in 0..=mmax {
            let row: Vec<String> = poly(m).coeffs().iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "{basis},{m},{}", row.join(","));
        }
    }
}

fn palindromic(out: &mut dyn Write, coeffs: &str, m: u64) -> Outcome {
    let c: Vec<f64> = coeffs
        .split(',')
        .map(|s| parse_rational(s).map(|r| to_f64(&r)))
        .collect::<Result<_>>()
        .map_err(Failure::Usage)?;
    let v = palindromic_integral(&c, m)?;
    let _ = writeln!(out, "{}", fmt_num(v));
    Ok(true)
}

/// Parses `argv` (program name first) and runs the command against `recs`.
pub fn run_with<I, T>(argv: I, recs: &RecurrenceSet, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Eval { a, m, method, digits } => eval(out, &a, m, &method, digits),
        Command::CrossValidate {
            grid,
            mmax,
            routes,
            tol,
            json,
        } => cross(out, &grid, mmax, routes.as_deref(), tol, json.as_ref()),
        Command::Verify { suite, json } => verify(out, suite.as_deref(), json.as_ref(), recs),
        Command::Table { mmax } => {
            table(out, mmax);
            Ok(true)
        }
        Command::Palindromic { coeffs, m } => palindromic(out, &coeffs, m),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &RecurrenceSet::default(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["quartic"];
        argv.extend_from_slice(args);
        let code = run_with(argv, &RecurrenceSet::default(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_wallis() {
        let (code, out, _) = run_capture(&["eval", "--a", "1", "--m", "1", "--digits", "10"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("5*pi/32 ≈ 0.4908738521"), "{out}");
        let (code, out, _) = run_capture(&["eval", "--a", "0.5", "--m", "2", "--method", "2f1"]);
        assert_eq!(code, 0);
        let v: f64 = out.trim().parse().unwrap();
        assert!((v - crate::pm::n04_closed_f64(0.5, 2).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn table_rows() {
        let (code, out, _) = run_capture(&["table", "--mmax", "2"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(&lines[1..4], ["monomial,0,1", "monomial,1,3/2,1", "monomial,2,21/8,15/4,3/2"]);
        assert_eq!(lines[4], "shifted,0,1");
    }

    #[test]
    fn usage_and_failure_codes() {
        assert_eq!(run_capture(&["eval", "--m", "1"]).0, 2);
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["eval", "--a", "x", "--m", "1"]).0, 2);
        assert_eq!(run_capture(&["verify", "--suite", "nope"]).0, 2);
        assert_eq!(run_capture(&["eval", "--a", "-1", "--m", "1"]).0, 1);
        assert_eq!(run_capture(&["eval", "--a", "5", "--m", "1", "--method", "2f1"]).0, 1);
        assert_eq!(run_capture(&["palindromic", "--coeffs", "1,-3,1", "--m", "1"]).0, 1);
    }

    #[test]
    fn verify_single_suite() {
        let (code, out, _) = run_capture(&["verify", "--suite", "pm-eq-qm"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("pm-eq-qm pass"));
    }

    #[test]
    fn palindromic_product() {
        let (code, out, _) = run_capture(&["palindromic", "--coeffs", "1,2,1", "--m", "2"]);
        assert_eq!(code, 0);
        let v: f64 = out.trim().parse().unwrap();
        assert!((v - 5.0 * std::f64::consts::PI / 32.0).abs() < 1e-13);
    }

    #[test]
    fn cross_validate_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        let p = path.to_str().unwrap();
        let args = ["cross-validate", "--grid", "1,-1/2", "--mmax", "1", "--routes", "closed,bomo,2f1", "--json", p];
        assert_eq!(run_capture(&args).0, 0);
        let first = std::fs::read_to_string(&path).unwrap();
        assert_eq!(run_capture(&args).0, 0);
        assert_eq!(first, std::fs::read_to_string(&path).unwrap());
        let v: serde_json::Value = serde_json::from_str(&first).unwrap();
        assert_eq!(v["reports"].as_array().unwrap().len(), 4);
        assert_eq!(v["meta"]["config"]["routes"][2], "2f1");
    }
}
