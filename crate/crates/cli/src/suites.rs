//! Property suites over ranges of blocks. Each suite yields one report per
//! e; each report row covers one block.

use std::collections::BTreeMap;

use fockdec::abacus::relative_e_sign;
use fockdec::blocks::{adjustment_matrix_with, blocks_up_to, BlockDescriptor, Provenance};
use fockdec::fock::{v_decomposition_matrix, DecompositionContext, DecompositionMatrix};
use fockdec::jantzen::{derivative_check_with, FieldSpec, Solver};
use fockdec::orders::{product_leq, JantzenOrder};
use fockdec::blocks::canonical_beads;
use fockdec::VPolynomial;

use crate::cache::{warm_block, Cache};
use crate::report::VerificationReport;
use crate::CliResult;

/// A range of blocks: every e in `es`, every weight in `weights`, cores of
/// at most `max_core` nodes, and blocks of `S_n` with n ≤ `max_n`.
#[derive(Clone, Debug)]
pub struct BlockRange {
    pub es: Vec<usize>,
    pub weights: Vec<usize>,
    pub max_core: usize,
    pub max_n: Option<usize>,
}

impl BlockRange {
    pub fn blocks(&self, e: usize) -> CliResult<Vec<BlockDescriptor>> {
        let mut out = Vec::new();
        for &w in &self.weights {
            for b in blocks_up_to(e, w, self.max_core)? {
                if self.max_n.is_none_or(|n| b.size() <= n) {
                    out.push(b);
                }
            }
        }
        Ok(out)
    }

    fn params(&self, e: usize) -> BTreeMap<String, i64> {
        let mut p = BTreeMap::from([
            ("e".to_string(), e as i64),
            ("max_weight".to_string(), self.weights.iter().copied().max().unwrap_or(0) as i64),
            ("max_core".to_string(), self.max_core as i64),
        ]);
        if let Some(n) = self.max_n {
            p.insert("max_n".to_string(), n as i64);
        }
        p
    }
}

fn matrix(ctx: &mut DecompositionContext, block: &BlockDescriptor, cache: Option<&Cache>) -> CliResult<DecompositionMatrix> {
    warm_block(ctx, block, cache)?;
    Ok(v_decomposition_matrix(ctx, block)?)
}

/// Runs `per_block` over every block of the range, one report per e.
fn run<F>(target: &str, range: &BlockRange, mut per_block: F) -> CliResult<Vec<VerificationReport>>
where
    F: FnMut(usize, &BlockDescriptor, &mut VerificationReport) -> CliResult<()>,
{
    let mut out = Vec::new();
    for &e in &range.es {
        let mut report = VerificationReport::new(target, range.params(e));
        for block in range.blocks(e)? {
            per_block(e, &block, &mut report)?;
        }
        out.push(report.finish());
    }
    Ok(out)
}

fn block_label(block: &BlockDescriptor) -> String {
    format!("{} w={}", block.label(), block.weight)
}

/// The parity law: `d_{λμ}(v) ∈ ℕ[v²]` when `σ_e(λ) = σ_e(μ)`, and
/// `d_{λμ}(v) ∈ vℕ[v²]` otherwise.
pub fn parity(range: &BlockRange, cache: Option<&Cache>) -> CliResult<Vec<VerificationReport>> {
    run("parity", range, |e, block, report| {
        let mut ctx = DecompositionContext::new(e)?;
        let m = matrix(&mut ctx, block, cache)?;
        let signs: Vec<i8> = m.partitions.iter().map(|p| relative_e_sign(p, e)).collect::<Result<_, _>>()?;
        let mut bad = Vec::new();
        for (r, row) in m.entries.iter().enumerate() {
            for (c, d) in row.iter().enumerate() {
                let parity = i32::from(signs[r] != signs[c]);
                if !(d.in_n_v() && d.has_parity(parity)) {
                    bad.push(format!("d({}, {}) = {d}", m.partitions[r], m.partitions[c]));
                }
            }
        }
        check_empty(report, block, &bad);
        Ok(())
    })
}

fn check_empty(report: &mut VerificationReport, block: &BlockDescriptor, bad: &[String]) {
    let computed = match bad.first() {
        None => "0 violations".to_string(),
        Some(first) => format!("{} violations, first {first}", bad.len()),
    };
    report.check(&[&block_label(block)], "0 violations", computed);
}

/// `(d/dv) d_{λμ}(v)` at v = 1 equals `B_ℂ(λ, μ)`.
pub fn derivative(range: &BlockRange, cache: Option<&Cache>) -> CliResult<Vec<VerificationReport>> {
    run("derivative", range, |e, block, report| {
        let mut ctx = DecompositionContext::new(e)?;
        warm_block(&mut ctx, block, cache)?;
        let bad: Vec<String> = derivative_check_with(&mut ctx, block)?
            .iter()
            .map(|m| format!("({}, {}): d'={} B={}", m.lambda, m.mu, m.derivative, m.bound))
            .collect();
        check_empty(report, block, &bad);
        Ok(())
    })
}

/// `λ ≤_J μ ⇒ λ ≤_P μ ⇒ λ ⊴ μ` on every pair of the block.
pub fn orders(range: &BlockRange) -> CliResult<Vec<VerificationReport>> {
    run("orders", range, |e, block, report| {
        let parts = fockdec::blocks::enumerate_block(block)?;
        let mut order = JantzenOrder::new(e, canonical_beads(&block.core, e, block.weight));
        let mut bad = Vec::new();
        for lambda in &parts {
            for mu in &parts {
                let j = order.leq(lambda, mu)?;
                let p = product_leq(lambda, mu, e)?;
                let d = mu.dominates(lambda)?;
                if (j && !p) || (p && !d) {
                    bad.push(format!("({lambda}, {mu}): J={j} P={p} dom={d}"));
                }
            }
        }
        check_empty(report, block, &bad);
        Ok(())
    })
}

/// Weight-1 blocks: in descending lexicographic order the partitions form a
/// chain `λ_1 > … > λ_e` with `d_{λ_{i+1}λ_i}(v) = v`, so the decomposition
/// matrix is the identity plus the subdiagonal, over ℂ and, via the solver,
/// in each characteristic of `primes`.
pub fn weight1(range: &BlockRange, primes: &[u64], cache: Option<&Cache>) -> CliResult<Vec<VerificationReport>> {
    run("weight1", range, |e, block, report| {
        let mut ctx = DecompositionContext::new(e)?;
        let m = matrix(&mut ctx, block, cache)?;
        let n = m.partitions.len();
        let expect = |r: usize, c: usize| -> VPolynomial {
            match r.checked_sub(c) {
                Some(0) => VPolynomial::one(),
                Some(1) => VPolynomial::monomial(1, 1),
                _ => VPolynomial::zero(),
            }
        };
        let mut bad = Vec::new();
        for r in 0..n {
            for c in 0..n {
                if m.entries[r][c] != expect(r, c) {
                    bad.push(format!("d({}, {}) = {}", m.partitions[r], m.partitions[c], m.entries[r][c]));
                }
            }
        }
        for &p in primes {
            let mut solver = Solver::new(e, FieldSpec::new(p)?)?;
            for r in 0..n {
                for c in 0..n {
                    let cell = solver.decomposition(&m.partitions[r], &m.partitions[c])?;
                    if cell.value() != Some(expect(r, c).eval_one()) {
                        bad.push(format!("p={p} [{}:{}] = {cell}", m.partitions[r], m.partitions[c]));
                    }
                }
            }
        }
        let label = format!("{} n={}", block_label(block), n);
        report.check(&[&label], "two-diagonal", if bad.is_empty() { "two-diagonal".to_string() } else { bad.join("; ") });
        Ok(())
    })
}

/// Every ℂ-decomposition number of a weight-3 block is at most 1.
pub fn weight3_bound(range: &BlockRange, cache: Option<&Cache>) -> CliResult<Vec<VerificationReport>> {
    run("weight3-bound", range, |e, block, report| {
        let mut ctx = DecompositionContext::new(e)?;
        let m = matrix(&mut ctx, block, cache)?;
        let mut bad = Vec::new();
        for (r, row) in m.entries.iter().enumerate() {
            for (c, d) in row.iter().enumerate() {
                if d.eval_one() > 1 {
                    bad.push(format!("d({}, {})(1) = {}", m.partitions[r], m.partitions[c], d.eval_one()));
                }
            }
        }
        check_empty(report, block, &bad);
        Ok(())
    })
}

/// No Determined adjustment entry differs from δ, in each characteristic
/// of `primes`. Counts of Determined and assumed entries go to the notes.
pub fn adjust_delta(range: &BlockRange, primes: &[u64]) -> CliResult<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for &p in primes {
        for &e in &range.es {
            let mut params = range.params(e);
            params.insert("p".to_string(), p as i64);
            let mut report = VerificationReport::new("adjust-delta", params);
            let mut solver = Solver::new(e, FieldSpec::new(p)?)?;
            let (mut determined, mut assumed, mut unknown) = (0, 0, 0);
            for block in range.blocks(e)? {
                let adj = adjustment_matrix_with(&mut solver, &block)?;
                determined += adj.count(Provenance::Determined);
                assumed += adj.count(Provenance::AssumedConjecture);
                unknown += adj.count(Provenance::Unknown);
                let bad: Vec<String> =
                    adj.delta_violations().iter().map(|(l, m, v)| format!("adj({l}, {m}) = {v}")).collect();
                check_empty(&mut report, &block, &bad);
            }
            report.note(format!("{determined} Determined, {assumed} assumed, {unknown} unknown entries"));
            out.push(report.finish());
        }
    }
    Ok(out)
}
