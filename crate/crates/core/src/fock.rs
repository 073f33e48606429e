//! The level-1 Fock space, the LLT algorithm and v-decomposition numbers.
//!
//! Convention: adding a node γ of residue j to λ contributes
//! `v^N` with `N = #{addable j-nodes above γ} − #{removable j-nodes above γ}`,
//! where "above" means a smaller row index. With this choice
//! `G((2)) = (2) + v(1,1)` at e = 2 and the canonical basis coefficients at
//! λ ≠ μ lie in vℕ[v].

use std::collections::{BTreeMap, HashMap};

use crate::abacus::{Abacus, RunnerKind};
use crate::blocks;
use crate::error::{Error, Result};
use crate::partition::{check_e, Partition};
use crate::poly::VPolynomial;

/// A finitely supported map Partition → VPolynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, VPolynomial>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector |λ⟩.
    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, VPolynomial::one());
        FockVector { terms }
    }

    pub fn coeff(&self, lambda: &Partition) -> VPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms in descending lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &VPolynomial)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += c·|λ⟩`.
    pub fn add_term(&mut self, lambda: Partition, c: &VPolynomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, p| !p.is_zero());
        }
    }

    /// `self -= c·x`.
    pub fn sub_scaled(&mut self, x: &FockVector, c: &VPolynomial) {
        for (lambda, p) in &x.terms {
            let term = -(p * c);
            let entry = self.terms.entry(lambda.clone()).or_default();
            *entry += &term;
            if entry.is_zero() {
                self.terms.remove(lambda);
            }
        }
    }
}

/// Addable and removable nodes of λ with residue j, as `(row, col)` pairs
/// (0-based) sorted by row.
fn j_nodes(lambda: &Partition, e: usize, j: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let mut addable = Vec::new();
    let mut removable = Vec::new();
    let l = lambda.len();
    for row in 0..=l {
        let col = lambda.part(row);
        if (row == 0 || lambda.part(row - 1) > col) && Partition::node_residue(row, col, e) == j {
            addable.push((row, col));
        }
        if row < l && lambda.part(row + 1) < col && Partition::node_residue(row, col - 1, e) == j {
            removable.push((row, col - 1));
        }
    }
    (addable, removable)
}

fn with_nodes_added(lambda: &Partition, rows: &[usize]) -> Partition {
    let mut parts = lambda.parts().to_vec();
    for &row in rows {
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
    }
    Partition::from_sorted(parts)
}

/// `f_j x`.
pub fn f_action(x: &FockVector, j: usize, e: usize) -> Result<FockVector> {
    check_e(e)?;
    let mut out = FockVector::zero();
    for (lambda, c) in &x.terms {
        let (addable, removable) = j_nodes(lambda, e, j % e);
        for (idx, &(row, _)) in addable.iter().enumerate() {
            let above_rem = removable.iter().filter(|&&(r, _)| r < row).count() as i32;
            let n = idx as i32 - above_rem;
            out.add_term(with_nodes_added(lambda, &[row]), &c.shift(n));
        }
    }
    Ok(out)
}

/// `f_j^(a) x`, by repeated application of `f_j` and exact division by `[a]!`.
pub fn divided_power_by_division(x: &FockVector, j: usize, a: u32, e: usize) -> Result<FockVector> {
    let mut y = x.clone();
    for _ in 0..a {
        y = f_action(&y, j, e)?;
    }
    let fact = VPolynomial::quantum_factorial(a);
    let mut out = FockVector::zero();
    for (lambda, c) in y.terms {
        out.add_term(lambda, &c.div_exact(&fact)?);
    }
    Ok(out)
}

/// `f_j^(a) x`, using the closed form: adding a set S of j-nodes contributes
/// `v^N` with `N = Σ_{γ∈S} (#{addable j-nodes of λ above γ, not in S} −
/// #{removable j-nodes of λ above γ})`.
pub fn divided_power(x: &FockVector, j: usize, a: u32, e: usize) -> Result<FockVector> {
    check_e(e)?;
    let a = a as usize;
    let mut out = FockVector::zero();
    for (lambda, c) in &x.terms {
        let (addable, removable) = j_nodes(lambda, e, j % e);
        if addable.len() < a {
            continue;
        }
        for subset in combinations(addable.len(), a) {
            let mut n = 0i32;
            let mut rows = Vec::with_capacity(a);
            for &k in &subset {
                let row = addable[k].0;
                rows.push(row);
                let free_above = k - subset.iter().filter(|&&s| s < k).count();
                let rem_above = removable.iter().filter(|&&(r, _)| r < row).count();
                n += free_above as i32 - rem_above as i32;
            }
            out.add_term(with_nodes_added(lambda, &rows), &c.shift(n));
        }
    }
    Ok(out)
}

/// All increasing `k`-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Ladders of μ in increasing order: `(residue, number of nodes)`.
///
/// Ladder k holds the nodes with 1-based `row + (e−1)(col−1) = k`; its
/// residue is `(1 − k) mod e`.
pub fn ladder_sequence(mu: &Partition, e: usize) -> Result<Vec<(usize, u32)>> {
    if !mu.is_e_regular(e)? {
        return Err(Error::NotERegular(mu.to_string(), e));
    }
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for (r, &len) in mu.parts().iter().enumerate() {
        for c in 0..len {
            *counts.entry(r + 1 + (e - 1) * c).or_default() += 1;
        }
    }
    Ok(counts.into_iter().map(|(k, n)| ((e + 1 - k % e) % e, n)).collect())
}

/// The first approximation A(μ): ladder divided powers applied to |∅⟩.
pub fn ladder_vector(mu: &Partition, e: usize) -> Result<FockVector> {
    let mut x = FockVector::basis(Partition::empty());
    for (j, a) in ladder_sequence(mu, e)? {
        x = divided_power(&x, j, a, e)?;
    }
    Ok(x)
}

/// Memo table of canonical basis vectors for a fixed e.
#[derive(Debug, Default)]
pub struct LltContext {
    e: usize,
    memo: HashMap<Partition, FockVector>,
}

impl LltContext {
    pub fn new(e: usize) -> Result<Self> {
        check_e(e)?;
        Ok(LltContext { e, memo: HashMap::new() })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// G(μ) for e-regular μ.
    pub fn canonical_basis(&mut self, mu: &Partition) -> Result<FockVector> {
        if let Some(g) = self.memo.get(mu) {
            return Ok(g.clone());
        }
        let e = self.e;
        let mut x = ladder_vector(mu, e)?;
        // Walk the support downward in lexicographic order; every correction
        // only touches partitions dominated by (hence lex below) the current one.
        let mut cursor = mu.clone();
        loop {
            let next = x.terms.range(..cursor.clone()).next_back().map(|(k, v)| (k.clone(), v.clone()));
            let Some((lambda, alpha)) = next else { break };
            cursor = lambda.clone();
            if alpha.in_v_z_v() {
                continue;
            }
            let gamma = alpha.bar_symmetric_completion();
            let g = self.canonical_basis(&lambda)?;
            x.sub_scaled(&g, &gamma);
        }
        for (lambda, c) in &x.terms {
            let ok = if lambda == mu { *c == VPolynomial::one() } else { c.in_v_n_v() };
            if !ok {
                return Err(Error::NonPositiveCoefficient {
                    mu: mu.to_string(),
                    lambda: lambda.to_string(),
                    coeff: c.to_string(),
                });
            }
        }
        self.memo.insert(mu.clone(), x.clone());
        Ok(x)
    }
}

/// G(μ) computed in a fresh context.
pub fn canonical_basis(mu: &Partition, e: usize) -> Result<FockVector> {
    LltContext::new(e)?.canonical_basis(mu)
}

/// Computes v-decomposition numbers, memoizing canonical bases at e and at
/// e + 1 (for e-singular columns).
#[derive(Debug)]
pub struct DecompositionContext {
    base: LltContext,
    lifted: LltContext,
    columns: HashMap<Partition, BTreeMap<Partition, VPolynomial>>,
    bead_counts: HashMap<(Partition, usize), usize>,
}

impl DecompositionContext {
    pub fn new(e: usize) -> Result<Self> {
        Ok(DecompositionContext {
            base: LltContext::new(e)?,
            lifted: LltContext::new(e + 1)?,
            columns: HashMap::new(),
            bead_counts: HashMap::new(),
        })
    }

    pub fn e(&self) -> usize {
        self.base.e
    }

    /// The column `λ ↦ d^e_{λμ}(v)` over the block of μ (nonzero entries only).
    pub fn column(&mut self, mu: &Partition) -> Result<BTreeMap<Partition, VPolynomial>> {
        if let Some(col) = self.columns.get(mu) {
            return Ok(col.clone());
        }
        let col = self.compute_column(mu)?;
        self.columns.insert(mu.clone(), col.clone());
        Ok(col)
    }

    /// Installs a column computed elsewhere, e.g. read from a cache.
    pub fn seed_column(&mut self, mu: Partition, column: BTreeMap<Partition, VPolynomial>) {
        self.columns.insert(mu, column);
    }

    /// Every column computed or seeded so far.
    pub fn columns(&self) -> &HashMap<Partition, BTreeMap<Partition, VPolynomial>> {
        &self.columns
    }

    fn compute_column(&mut self, mu: &Partition) -> Result<BTreeMap<Partition, VPolynomial>> {
        let e = self.e();
        if mu.is_e_regular(e)? {
            let g = self.base.canonical_basis(mu)?;
            return Ok(g.terms);
        }
        let key = blocks::core_and_weight(mu, e)?;
        let r = match self.bead_counts.get(&key) {
            Some(&r) => r,
            None => {
                let r = block_bead_count(mu, e)?;
                self.bead_counts.insert(key, r);
                r
            }
        };
        let lifted = Abacus::from_partition(mu, e, r)?.insert_runner(e, RunnerKind::Empty)?.to_partition();
        let g = self.lifted.canonical_basis(&lifted)?;
        let mut out = BTreeMap::new();
        for (nu, c) in g.terms {
            let Ok(display) = Abacus::from_partition(&nu, e + 1, r) else { continue };
            if display.bead_counts()[e] != 0 {
                continue;
            }
            let lambda = remove_last_runner(&display).to_partition();
            out.insert(lambda, c);
        }
        Ok(out)
    }

    /// d^e_{λμ}(v); zero when λ and μ lie in different blocks.
    pub fn v_decomposition(&mut self, lambda: &Partition, mu: &Partition) -> Result<VPolynomial> {
        let e = self.e();
        if lambda.size() != mu.size() || blocks::core_and_weight(lambda, e)? != blocks::core_and_weight(mu, e)? {
            return Ok(VPolynomial::zero());
        }
        Ok(self.column(mu)?.remove(lambda).unwrap_or_default())
    }
}

/// Bead count used when lifting a block to e + 1 runners: the longest
/// partition in the block, so that every partition of the block is displayed
/// with the same r and lifted consistently.
fn block_bead_count(lambda: &Partition, e: usize) -> Result<usize> {
    let b = blocks::block_of(lambda, e)?;
    Ok(blocks::enumerate_block(&b)?.iter().map(Partition::len).max().unwrap_or(0).max(1))
}

/// Drops runner e−1 (which must be empty) from a display.
fn remove_last_runner(display: &Abacus) -> Abacus {
    let e = display.e();
    let positions: Vec<usize> = display.beta().into_iter().map(|p| (p / e) * (e - 1) + p % e).collect();
    Abacus::from_positions(e - 1, &positions).expect("distinct positions")
}

/// d^e_{λμ}(v) in a fresh context.
pub fn v_decomposition(lambda: &Partition, mu: &Partition, e: usize) -> Result<VPolynomial> {
    DecompositionContext::new(e)?.v_decomposition(lambda, mu)
}

/// d^e_{λμ}(v) computed after inserting an empty runner into a display of
/// both partitions with `r` beads, at slot `slot`.
pub fn v_decomposition_lifted(
    lambda: &Partition,
    mu: &Partition,
    e: usize,
    r: usize,
    slot: usize,
) -> Result<VPolynomial> {
    let lift = |p: &Partition| -> Result<Partition> {
        Ok(Abacus::from_partition(p, e, r)?.insert_runner(slot, RunnerKind::Empty)?.to_partition())
    };
    v_decomposition(&lift(lambda)?, &lift(mu)?, e + 1)
}

/// The ℂ-decomposition matrix of a block: rows and columns indexed by the
/// block's partitions in descending lexicographic order, entries d(1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<VPolynomial>>,
}

impl DecompositionMatrix {
    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }

    /// `d(1)` at `(λ, μ)` by index.
    pub fn at_one(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col].eval_one()
    }
}

/// All v-decomposition numbers of a block.
pub fn v_decomposition_matrix(
    ctx: &mut DecompositionContext,
    block: &blocks::BlockDescriptor,
) -> Result<DecompositionMatrix> {
    let partitions = blocks::enumerate_block(block)?;
    let n = partitions.len();
    let mut entries = vec![vec![VPolynomial::zero(); n]; n];
    for (col, mu) in partitions.iter().enumerate() {
        let column = ctx.column(mu)?;
        for (row, lambda) in partitions.iter().enumerate() {
            if let Some(c) = column.get(lambda) {
                entries[row][col] = c.clone();
            }
        }
    }
    Ok(DecompositionMatrix { partitions, entries })
}

/// The ℂ-decomposition matrix `d(1)` of a block.
pub fn decomposition_matrix_c(block: &blocks::BlockDescriptor) -> Result<Vec<Vec<i64>>> {
    let mut ctx = DecompositionContext::new(block.e)?;
    let m = v_decomposition_matrix(&mut ctx, block)?;
    Ok(m.entries.iter().map(|row| row.iter().map(VPolynomial::eval_one).collect()).collect())
}

/// Deletes a runner that is full-eligible in the displays of both λ and μ
/// (with `r` beads), returning the pair at e − 1.
pub fn full_runner_delete_check(
    lambda: &Partition,
    mu: &Partition,
    e: usize,
    r: usize,
) -> Result<(Partition, Partition)> {
    if e < 3 {
        return Err(Error::NoEligibleRunner);
    }
    let a = Abacus::from_partition(lambda, e, r)?;
    let b = Abacus::from_partition(mu, e, r)?;
    for i in 0..e {
        if a.runner_full_eligible(i) && b.runner_full_eligible(i) {
            return Ok((a.delete_runner(i)?.to_partition(), b.delete_runner(i)?.to_partition()));
        }
    }
    Err(Error::NoEligibleRunner)
}
