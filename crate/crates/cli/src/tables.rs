//! Checks of the bundled tables against computed values.

use std::collections::BTreeSet;

use fockdec::abacus::epsilon;
use fockdec::blocks::{canonical_beads, core_and_weight, find_semisimple_path_to, is_rouquier, BlockDescriptor};
use fockdec::fock::DecompositionContext;
use fockdec::jantzen::{js_row, FieldSpec, Solver};
use fockdec::notation::parse_block_label;
use fockdec::orders::JantzenOrder;
use fockdec::{Partition, VPolynomial};

use crate::golden::{Claim, Golden, JantzenInstance, PairInstance, Params};
use crate::report::VerificationReport;
use crate::CliResult;

/// Characteristics at which the solver must reproduce the printed [W:L].
pub const SOLVER_PRIMES: [u64; 3] = [0, 5, 7];

/// The block with run-length bead counts `counts`, e.g. `4^2,6,9^0`.
pub fn block_from_counts(counts: &str, weight: usize) -> CliResult<BlockDescriptor> {
    let counts = parse_block_label(&format!("<{counts}>"))?;
    Ok(BlockDescriptor::from_counts(&counts, weight)?)
}

fn in_block(lambda: &Partition, block: &BlockDescriptor) -> CliResult<bool> {
    Ok(core_and_weight(lambda, block.e)? == (block.core.clone(), block.weight))
}

/// Verifies a Jantzen table: every printed J, B and [W:L], and the
/// solver's value of [W:L] in each characteristic of [`SOLVER_PRIMES`].
///
/// One report row per table row, covering its printed cells only; B is
/// the full sum over all J-successors. Nonzero coefficients in blank cells,
/// successors with `d(σ, μ̂) ≠ 0` that are not columns, and members of the
/// J-interval between the last row and μ̂ that are not rows are reported
/// as notes.
pub fn verify_jantzen(name: &str, inst: &JantzenInstance, params: &Params) -> CliResult<VerificationReport> {
    let mut report = VerificationReport::new(name, params.clone());
    let block = block_from_counts(&inst.counts, inst.weight)?;
    let e = block.e;
    let mu = block.partition(&inst.mu)?;
    let columns: Vec<Partition> = inst.columns.iter().map(|c| block.partition(c)).collect::<Result<_, _>>()?;
    let mut ctx = DecompositionContext::new(e)?;
    let col_mu = ctx.column(&mu)?;
    let d_at = |t: &Partition| col_mu.get(t).map_or(0, VPolynomial::eval_one);
    let mut solvers: Vec<Solver> =
        SOLVER_PRIMES.iter().map(|&p| Solver::new(e, FieldSpec::new(p)?)).collect::<Result<_, _>>()?;
    let mut order = JantzenOrder::new(e, canonical_beads(&block.core, e, block.weight));
    let rows: Vec<Partition> = inst.rows.iter().map(|r| block.partition(&r.label)).collect::<Result<_, _>>()?;
    let lowest = rows.last().cloned().unwrap_or_else(|| mu.clone());
    let mut seen = BTreeSet::new();
    for (row, nu) in inst.rows.iter().zip(&rows) {
        let placed = in_block(nu, &block)? && seen.insert(nu.clone()) && order.leq(&lowest, nu)? && order.leq(nu, &mu)?;
        let mut expected = vec!["in-interval".to_string()];
        let mut computed = vec![if placed { "in-interval" } else { "outside-interval" }.to_string()];

        let j = js_row(nu, e, FieldSpec::complex())?;
        for (k, (cell, sigma)) in row.cells.iter().zip(&columns).enumerate() {
            let value = j.get(sigma).copied().unwrap_or(0);
            match cell {
                Some(v) => {
                    expected.push(format!("J{}={v}", k + 1));
                    computed.push(format!("J{}={value}", k + 1));
                }
                None if value != 0 => {
                    report.note(format!("{}: blank cell J({}, {}) is {value}", row.label, row.label, inst.columns[k]));
                }
                None => {}
            }
        }
        for (sigma, c) in &j {
            if !columns.contains(sigma) && d_at(sigma) != 0 {
                let label = block.notation(sigma)?;
                report.note(format!("{}: J = {c} at {label}, which has d = {} and is not a column", row.label, d_at(sigma)));
            }
        }
        if let Some(b) = row.bound {
            let full: i64 = j.iter().map(|(t, c)| c * d_at(t)).sum();
            expected.push(format!("B={b}"));
            computed.push(format!("B={full}"));
        }
        if let Some(w) = row.dec {
            expected.push(format!("W={w}"));
            computed.push(format!("W={}", d_at(nu)));
            for (solver, p) in solvers.iter_mut().zip(SOLVER_PRIMES) {
                expected.push(format!("p{p}={w}"));
                computed.push(format!("p{p}={}", solver.decomposition(nu, &mu)?));
            }
        }
        report.check(&[&row.label], expected.join(" "), computed.join(" "));
    }
    for sigma in order.up_set(&lowest)?.clone() {
        if !seen.contains(&sigma) && order.leq(&sigma, &mu)? {
            report.note(format!("{} lies J-between {} and the top row but is not a row", block.notation(&sigma)?, inst.rows.last().map_or("", |r| r.label.as_str())));
        }
    }
    Ok(report.finish())
}

/// Verifies a pair table: each λ lies below μ in the block, printed
/// d-values agree with LLT, each μ has no normal nodes, and every claim
/// gives a semisimple induction into a Rouquier block. A λ list that is not
/// in descending lexicographic order is reported as a note.
pub fn verify_pairs(name: &str, inst: &PairInstance, params: &Params) -> CliResult<VerificationReport> {
    let mut report = VerificationReport::new(name, params.clone());
    let block = block_from_counts(&inst.counts, inst.weight)?;
    let e = block.e;
    let mut ctx = DecompositionContext::new(e)?;
    for case in &inst.cases {
        let mu = block.partition(&case.mu)?;
        let normal: Vec<usize> = (0..e).map(|j| epsilon(&mu, e, j)).collect::<Result<_, _>>()?;
        report.check(
            &[&case.mu, "mu"],
            "in-block no-normal-nodes",
            format!(
                "{} {}",
                if in_block(&mu, &block)? { "in-block" } else { "misplaced" },
                if normal.iter().all(|&n| n == 0) { "no-normal-nodes".to_string() } else { format!("eps={normal:?}") }
            ),
        );
        let column = ctx.column(&mu)?;
        let mut lambdas = Vec::new();
        for (label, printed) in &case.lambdas {
            let lambda = block.partition(label)?;
            let below = lambda != mu && mu.dominates(&lambda)?;
            let place = format!(
                "{} {}",
                if in_block(&lambda, &block)? { "in-block" } else { "misplaced" },
                if below { "below-mu" } else { "not-below-mu" }
            );
            let d = column.get(&lambda).cloned().unwrap_or_default();
            match printed {
                Some(text) => report.check(&[&case.mu, label], format!("in-block below-mu d={text}"), format!("{place} d={d}")),
                None => report.check(&[&case.mu, label], "in-block below-mu", place),
            };
            lambdas.push(lambda);
        }
        if let Some(k) = lambdas.windows(2).position(|w| w[0] <= w[1]) {
            report.note(format!(
                "{}: {} = {} is listed before {} = {}, not in descending lexicographic order",
                case.mu, case.lambdas[k].0, lambdas[k], case.lambdas[k + 1].0, lambdas[k + 1]
            ));
        }
    }
    for claim in &inst.claims {
        let label = format!("{} ~ {} | {}", claim.from, claim.to, claim.to_counts);
        report.check_result(&[&label, "claim"], "semisimple Rouquier", check_claim(claim, inst.weight, e));
    }
    Ok(report.finish())
}

/// `semisimple Rouquier` when the claim holds, otherwise what failed.
pub fn check_claim(claim: &Claim, weight: usize, e: usize) -> CliResult<String> {
    let from_block = block_from_counts(&claim.from_counts, weight)?;
    let to_block = block_from_counts(&claim.to_counts, weight)?;
    let from = from_block.partition(&claim.from)?;
    let to = to_block.partition(&claim.to)?;
    let path = find_semisimple_path_to(&from, &to, e)?;
    Ok(format!(
        "{} {}",
        if path.is_some() { "semisimple" } else { "no-path" },
        if is_rouquier(&to_block) { "Rouquier" } else { "not-Rouquier" }
    ))
}

/// Runs a bundled table at the given parameters.
pub fn verify_golden(name: &str, golden: &Golden, params: &Params) -> CliResult<VerificationReport> {
    match golden {
        Golden::Jantzen(t) => verify_jantzen(name, &t.instantiate(params)?, params),
        Golden::Pairs(t) => verify_pairs(name, &t.instantiate(params)?, params),
    }
}
