use std::collections::BTreeMap;
use std::fmt::Write;

use weyl_core::{Status, VerificationReport};

pub fn render_json(reports: &[VerificationReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("reports serialize");
    out.push('\n');
    out
}

#[derive(Default)]
struct Tally {
    pass: usize,
    fail: usize,
    error: usize,
    elapsed_ms: f64,
}

/// Per-suite totals, then one line per failing (or, with `verbose`, every)
/// instance.
pub fn render_text(reports: &[VerificationReport], verbose: bool) -> String {
    let mut order = Vec::new();
    let mut tallies: BTreeMap<&str, Tally> = BTreeMap::new();
    for r in reports {
        let tally = tallies.entry(&r.suite).or_insert_with(|| {
            order.push(r.suite.as_str());
            Tally::default()
        });
        match r.status {
            Status::Pass => tally.pass += 1,
            Status::Fail => tally.fail += 1,
            Status::Error => tally.error += 1,
        }
        tally.elapsed_ms += r.elapsed_ms.unwrap_or(0.0);
    }

    let mut out = String::new();
    let timed = reports.iter().any(|r| r.elapsed_ms.is_some());
    for suite in order {
        let t = &tallies[suite];
        let total = t.pass + t.fail + t.error;
        let _ = write!(out, "{suite:<15} {:>5}/{total:<5} pass", t.pass);
        if t.fail > 0 {
            let _ = write!(out, "  {} fail", t.fail);
        }
        if t.error > 0 {
            let _ = write!(out, "  {} error", t.error);
        }
        if timed {
            let _ = write!(out, "  ({:.1} ms)", t.elapsed_ms);
        }
        out.push('\n');
    }

    let listed: Vec<_> = reports.iter().filter(|r| verbose || !r.passed()).collect();
    if !listed.is_empty() {
        out.push('\n');
    }
    for r in listed {
        let _ = write!(out, "{} {} [{}]", r.status, r.suite, r.param_summary());
        if !r.witness.is_empty() {
            let _ = write!(out, ": {}", r.witness);
        }
        out.push('\n');
    }
    out
}
