//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::json;
use weyl_core::hermite::{build_operators, DEFAULT_TOL};
use weyl_core::suites::{
    default_fixtures, sequence_properties, similarity_solution, verify_hermite, Fixture,
};
use weyl_core::{run_suite, Suite, SuiteConfig, VerificationReport, WeylElement};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn config(max_n: Option<u32>, max_m: Option<u32>, max_l: Option<u32>) -> SuiteConfig {
    SuiteConfig {
        max_n,
        max_m,
        max_l,
        ..SuiteConfig::default()
    }
}

fn all_pass(reports: &[VerificationReport]) -> Result<usize, String> {
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(reports.len()),
        Some(r) => Err(format!(
            "{} [{}] {}: {}",
            r.suite,
            r.param_summary(),
            r.status,
            r.witness
        )),
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, budget {budget:?}"))
    }
}

fn nested_anticomm_table() -> Outcome {
    let start = Instant::now();
    let reports = run_suite(Suite::Hamiltonian, &config(Some(6), None, None));
    let elapsed = start.elapsed();
    let table = [
        json!(["1"]),
        json!(["0", "1"]),
        json!(["-1/4", "0", "1"]),
        json!(["0", "-3/4", "0", "1"]),
        json!(["5/16", "0", "-3/2", "0", "1"]),
        json!(["0", "25/16", "0", "-5/2", "0", "1"]),
        json!(["-61/64", "0", "75/16", "0", "-15/4", "0", "1"]),
    ];
    if reports.len() != 7 {
        return Err(format!("expected 7 records, got {}", reports.len()));
    }
    all_pass(&reports)?;
    for (n, (report, expected)) in reports.iter().zip(&table).enumerate() {
        let got = &report.data.as_ref().ok_or("missing data")?["polynomial"];
        if got != expected {
            return Err(format!("n={n}: polynomial {got} vs {expected}"));
        }
    }
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("7 polynomials exact in {elapsed:.2?}"))
}

fn main_identity_sweep() -> Outcome {
    let start = Instant::now();
    let reports = run_suite(Suite::Hamiltonian, &config(Some(12), None, None));
    let elapsed = start.elapsed();
    let count = all_pass(&reports)?;
    if count != 13 {
        return Err(format!("expected 13 records, got {count}"));
    }
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("n = 0..12 exact in {elapsed:.2?}"))
}

fn convolution_family() -> Outcome {
    let cfg = config(Some(10), Some(10), None);
    let conv = all_pass(&run_suite(Suite::Convolution, &cfg))?;
    let reciprocal = all_pass(&run_suite(Suite::Reciprocal, &cfg))?;
    if conv != 121 || reciprocal != 121 {
        return Err(format!("instance counts {conv}/{reciprocal}, expected 121"));
    }
    Ok("convolution, reciprocal and Bernoulli rewriting for n, m <= 10".into())
}

fn sequence_tables() -> Outcome {
    let reports = run_suite(Suite::Sequences, &config(Some(16), None, None));
    all_pass(&reports)?;
    let data = reports[0].data.as_ref().ok_or("missing data")?;
    let kappa = data["kappa"].as_array().ok_or("kappa missing")?;
    let lambda = data["lambda"].as_array().ok_or("lambda missing")?;
    let expect = |list: &[serde_json::Value], n: usize, value: &str| -> Result<(), String> {
        match list.get(n).and_then(|v| v.as_str()) {
            Some(v) if v == value => Ok(()),
            other => Err(format!("index {n}: {other:?} vs {value}")),
        }
    };
    for (n, v) in [
        (1, "1/2"),
        (3, "-1/4"),
        (5, "1/2"),
        (7, "-17/8"),
        (9, "31/2"),
    ] {
        expect(kappa, n, v)?;
    }
    for n in (0..=16).step_by(2) {
        expect(kappa, n, "0")?;
    }
    for (n, v) in [(0, "1"), (2, "-1"), (4, "5"), (6, "-61")] {
        expect(lambda, n, v)?;
    }
    for n in (1..=16).step_by(2) {
        expect(lambda, n, "0")?;
    }
    Ok("kappa and lambda tables up to 16".into())
}

fn similarity_fixtures() -> Outcome {
    let fixtures: Vec<Fixture> = default_fixtures().into_iter().take(4).collect();
    let cfg = SuiteConfig {
        fixtures: Some(fixtures),
        ..SuiteConfig::default()
    };
    let count = all_pass(&run_suite(Suite::Similarity, &cfg))?;
    if count != 4 {
        return Err(format!("expected 4 fixtures, got {count}"));
    }
    let h0: WeylElement = "1 * p^2".parse().map_err(|e| format!("{e}"))?;
    let (h1, h) = similarity_solution(&h0, &WeylElement::q()).map_err(|e| e.to_string())?;
    let h1_expected: WeylElement = "-i*c * p".parse().map_err(|e| format!("{e}"))?;
    let h_expected: WeylElement = "1 * p^2 + -1/4*c^2".parse().map_err(|e| format!("{e}"))?;
    if h1 != h1_expected || h != h_expected {
        return Err(format!("hand fixture: h1 = {h1}, h = {h}"));
    }
    Ok("4 fixtures exact; h1 = -icp, h = p^2 - c^2/4".into())
}

fn combinatorics() -> Outcome {
    let reports = run_suite(Suite::Combinatorics, &config(Some(8), None, None));
    let count = all_pass(&reports)?;
    Ok(format!("{count} orders (even 2..16, odd 1..17)"))
}

fn binomial() -> Outcome {
    let reports = run_suite(Suite::Binomial, &config(Some(12), Some(12), Some(12)));
    let count = all_pass(&reports)?;
    if count != 2 * 13 * 13 * 13 {
        return Err(format!("unexpected instance count {count}"));
    }
    Ok(format!("{count} plain/Euler instances for m, n, l <= 12"))
}

fn oracle_agreement() -> Outcome {
    let cfg = SuiteConfig {
        cases: 100,
        max_l: Some(8),
        ..SuiteConfig::default()
    };
    let count = all_pass(&run_suite(Suite::Oracles, &cfg))?;
    if count != 100 {
        return Err(format!("expected 100 cases, got {count}"));
    }
    let ops = build_operators(64).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for n in 0..=8 {
        let report = verify_hermite(n, &ops, DEFAULT_TOL);
        all_pass(std::slice::from_ref(&report))?;
        let err = report
            .data
            .as_ref()
            .and_then(|d| d["max_rel_error"].as_f64())
            .unwrap_or(f64::NAN);
        worst = worst.max(err);
    }
    if worst.is_nan() || worst > DEFAULT_TOL {
        return Err(format!("worst relative error {worst:e}"));
    }
    Ok(format!(
        "100 realization cases exact; hermite worst relative error {worst:.2e}"
    ))
}

fn property_suites() -> Outcome {
    let report = sequence_properties(20);
    all_pass(std::slice::from_ref(&report))?;
    Ok("Euler/Bernoulli invariants to 20, linear solve to 12".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("nested anticommutator table", nested_anticomm_table),
        ("main identity sweep", main_identity_sweep),
        ("convolution identities", convolution_family),
        ("sequence tables", sequence_tables),
        ("pseudo-hermitian fixtures", similarity_fixtures),
        ("combinatorial sums", combinatorics),
        ("binomial/euler identity", binomial),
        ("oracle agreement", oracle_agreement),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {} {name}: PASS ({detail}; {elapsed:.2?})",
                idx + 1
            ),
            Err(reason) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({reason})", idx + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
