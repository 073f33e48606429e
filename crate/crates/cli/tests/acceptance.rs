//! One PASS/FAIL line per acceptance criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use fockdec::abacus::insert_runner;
use fockdec::abacus::RunnerKind;
use fockdec::fock::v_decomposition;
use fockdec::notation::RunnerNotation;
use fockdec::orders::{induced_e_sequence, product_leq};
use fockdec::{Partition, VPolynomial};
use fockdec_cli::report::VerificationReport;
use fockdec_cli::verify::{run_target, VerifyOptions};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn run_all(targets: &[&str]) -> Vec<VerificationReport> {
    let opts = VerifyOptions::default();
    targets.iter().flat_map(|t| run_target(t, &opts).unwrap()).collect()
}

fn reports_outcome(reports: &[VerificationReport], elapsed: Duration, limit: Option<Duration>) -> Outcome {
    let rows: usize = reports.iter().map(|r| r.rows.len()).sum();
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| r.rows.iter().filter(|row| !row.matched).map(move |row| format!("{} {}", r.target, row.labels.join(" / "))))
        .collect();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let mut detail = format!("{} reports, {rows} rows, {} mismatches, {:.1}s", reports.len(), failed.len(), elapsed.as_secs_f64());
    if let Some(first) = failed.first() {
        detail.push_str(&format!("; first: {first}"));
    }
    if !in_time {
        detail.push_str(&format!("; over the {}s limit", limit.unwrap().as_secs()));
    }
    outcome(rows > 0 && failed.is_empty() && in_time, detail)
}

fn timed_targets(targets: &[&str], limit: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let reports = run_all(targets);
    reports_outcome(&reports, start.elapsed(), limit)
}

fn notation(text: &str) -> Partition {
    text.parse::<RunnerNotation>().unwrap().to_partition().unwrap()
}

fn tables_4e() -> Outcome {
    timed_targets(&["4e"], Some(Duration::from_secs(60)))
}

fn tables_41() -> Outcome {
    timed_targets(&["41-1", "41-2", "41-3", "41-6"], Some(Duration::from_secs(300)))
}

fn difficult_values() -> Outcome {
    let start = Instant::now();
    let reports = run_all(&["prop-4e"]);
    let es: Vec<i64> = reports.iter().filter_map(|r| r.params.get("e").copied()).collect();
    let d_rows = reports
        .iter()
        .flat_map(|r| &r.rows)
        .filter(|row| row.labels.iter().any(|l| l.starts_with("d(")))
        .count();
    let mut o = reports_outcome(&reports, start.elapsed(), None);
    o.passed &= es == [3, 4] && d_rows >= 2 * 5;
    o.detail.push_str(&format!("; e = {es:?}, {d_rows} d-value rows"));
    o
}

fn product_order_example() -> Outcome {
    let lambda: Partition = "10,6,5,2,1,1".parse().unwrap();
    let mu: Partition = "15,3,3,2,2".parse().unwrap();
    let s = induced_e_sequence(&lambda, 5, 10).unwrap();
    let t = induced_e_sequence(&mu, 5, 10).unwrap();
    let dom = mu.dominates(&lambda).unwrap();
    let prod = product_leq(&lambda, &mu, 5).unwrap();
    let passed = s == [19, 14, 14, 12, 9] && t == [24, 19, 14, 11, 10] && dom && !prod;
    outcome(passed, format!("s(lambda) = {s:?}, s(mu) = {t:?}, dominates = {dom}, product_leq = {prod}"))
}

fn empty_runner_example() -> Outcome {
    let v = VPolynomial::monomial(1, 1);
    let mut bad = Vec::new();
    let hat = v_decomposition(&notation("<0_{1^2},2_{1^2}|2^4>"), &notation("<0,1,2,3|2^4>"), 4).unwrap();
    if hat != v {
        bad.push(format!("d4(hat) = {hat}"));
    }
    let plus = v_decomposition(&notation("<0_{1^2},2_{1^2}|2^4,0>"), &notation("<0,1,2,3|2^4,0>"), 5).unwrap();
    if plus != v {
        bad.push(format!("d5(plus) = {plus}"));
    }
    let mut checked = 2;
    for e in 4..=6 {
        let counts = vec!["2"; e].join(",");
        let lambda = notation(&format!("<0_{{1^2}},2_{{1^2}}|{counts}>"));
        let mu = notation(&format!("<0,1,2,3|{counts}>"));
        let d = v_decomposition(&lambda, &mu, e).unwrap();
        checked += 1;
        if d != v {
            bad.push(format!("d{e} = {d}"));
        }
        if e < 6 {
            for slot in 0..=e {
                let l = insert_runner(&lambda, e, 2 * e, RunnerKind::Empty, slot).unwrap();
                let m = insert_runner(&mu, e, 2 * e, RunnerKind::Empty, slot).unwrap();
                let d = v_decomposition(&l, &m, e + 1).unwrap();
                checked += 1;
                if d != v {
                    bad.push(format!("e={e} slot {slot}: {d}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} values equal v{}", if bad.is_empty() { String::new() } else { format!("; bad: {}", bad.join(", ")) }))
}

fn criteria() -> Vec<(&'static str, fn() -> Outcome)> {
    vec![
        ("tables 4e 1 and 4e 2 at e = 2, 3, 4", tables_4e),
        ("tables 4:1 1, 2, 3, 6 with solver at p = 0, 5, 7", tables_41),
        ("difficult weight-4 values at e = 3, 4", difficult_values),
        ("induced e-sequences and the product order example", product_order_example),
        ("empty-runner example for e = 4..6", empty_runner_example),
        ("weight-1 blocks two-diagonal over C and every p", || timed_targets(&["weight1"], Some(Duration::from_secs(120)))),
        ("parity of v-decomposition numbers", || timed_targets(&["parity"], None)),
        ("derivative identity", || timed_targets(&["derivative"], Some(Duration::from_secs(600)))),
        ("J-order implies P-order implies dominance", || timed_targets(&["orders"], None)),
        ("weight-3 decomposition numbers at most 1", || timed_targets(&["weight3-bound"], None)),
        ("determined adjustment entries equal delta at p = 5, 7", || timed_targets(&["adjust-delta"], None)),
    ]
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria().into_iter().enumerate() {
        let o = check();
        let line = format!("{} criterion {}: {name} ({})\n", if o.passed { "PASS" } else { "FAIL" }, i + 1, o.detail);
        // Written past the test harness's capture so the lines always show.
        std::io::stdout().write_all(line.as_bytes()).unwrap();
        if !o.passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
