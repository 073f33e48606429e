//! Blocks: descriptors, enumeration, [w:k]-pairs, Rouquier blocks, Ḟ
//! operators, Grothendieck-level branching and adjustment matrices.

use std::fmt;

use crate::abacus::{working_abacus, Abacus};
use crate::error::{Error, Result};
use crate::jantzen::{solve_block_with, FieldSpec, Solver, SolverCell};
use crate::notation::{format_block_label, RunnerNotation};
use crate::orders::JantzenOrder;
use crate::partition::{check_e, Partition};

/// A block of weight `w` with e-core `core`, together with the runner bead
/// counts of the core at a fixed bead count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockDescriptor {
    pub e: usize,
    pub core: Partition,
    pub weight: usize,
    pub bead_counts: Vec<usize>,
}

impl BlockDescriptor {
    /// The block whose core has the given runner bead counts.
    pub fn from_counts(counts: &[usize], weight: usize) -> Result<Self> {
        let e = counts.len();
        check_e(e)?;
        let positions: Vec<usize> =
            counts.iter().enumerate().flat_map(|(i, &b)| (0..b).map(move |row| row * e + i)).collect();
        let core = Abacus::from_positions(e, &positions)?.to_partition();
        Ok(BlockDescriptor { e, core, weight, bead_counts: counts.to_vec() })
    }

    /// Total bead count r of `bead_counts`.
    pub fn beads(&self) -> usize {
        self.bead_counts.iter().sum()
    }

    pub fn size(&self) -> usize {
        self.core.size() + self.e * self.weight
    }

    /// The block label `<b_0,…,b_{e-1}>`.
    pub fn label(&self) -> String {
        format_block_label(&self.bead_counts)
    }

    /// The partition with the given quotient entries, e.g. `<0,2_{1^2}>`,
    /// read against this block's bead counts.
    pub fn partition(&self, entries: &str) -> Result<Partition> {
        RunnerNotation::with_counts(entries, &self.bead_counts)?.to_partition()
    }

    /// The runner notation of λ against this block's bead counts.
    pub fn notation(&self, lambda: &Partition) -> Result<RunnerNotation> {
        Ok(Abacus::from_partition(lambda, self.e, self.beads())?.quotient())
    }
}

impl fmt::Display for BlockDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (weight {})", self.label(), self.weight)
    }
}

/// Canonical bead count for a block: the least multiple of e that is at
/// least `l(core) + e·w`.
pub fn canonical_beads(core: &Partition, e: usize, w: usize) -> usize {
    (core.len() + e * w).div_ceil(e).max(1) * e
}

/// `(e-core, e-weight)`.
pub fn core_and_weight(lambda: &Partition, e: usize) -> Result<(Partition, usize)> {
    let a = working_abacus(lambda, e)?;
    Ok((a.core().to_partition(), a.weight()))
}

/// The block of λ, with bead counts at the canonical bead count.
pub fn block_of(lambda: &Partition, e: usize) -> Result<BlockDescriptor> {
    let (core, weight) = core_and_weight(lambda, e)?;
    let r = canonical_beads(&core, e, weight);
    block_of_with_beads(lambda, e, r)
}

/// The block of λ, with bead counts read from a display with `r` beads.
pub fn block_of_with_beads(lambda: &Partition, e: usize, r: usize) -> Result<BlockDescriptor> {
    let a = Abacus::from_partition(lambda, e, r)?;
    let core = a.core();
    Ok(BlockDescriptor { e, core: core.to_partition(), weight: a.weight(), bead_counts: core.bead_counts() })
}

/// The block with the given e-core and weight, at the canonical bead count.
pub fn block_with_core(core: &Partition, e: usize, weight: usize) -> Result<BlockDescriptor> {
    check_e(e)?;
    if core_and_weight(core, e)?.1 != 0 {
        return Err(Error::PreconditionViolated(format!("{core} is not an {e}-core")));
    }
    let r = canonical_beads(core, e, weight);
    let counts = Abacus::from_partition(core, e, r)?.bead_counts();
    Ok(BlockDescriptor { e, core: core.clone(), weight, bead_counts: counts })
}

/// Every e-core of size at most `max_size`, smallest first.
pub fn e_cores_up_to(e: usize, max_size: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        for p in crate::partition::partitions_of(n) {
            if core_and_weight(&p, e)?.1 == 0 {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Every block of weight `weight` whose core has at most `max_core` nodes.
pub fn blocks_up_to(e: usize, weight: usize, max_core: usize) -> Result<Vec<BlockDescriptor>> {
    e_cores_up_to(e, max_core)?.iter().map(|c| block_with_core(c, e, weight)).collect()
}

/// All partitions of the block, in descending lexicographic order.
pub fn enumerate_block(block: &BlockDescriptor) -> Result<Vec<Partition>> {
    let e = block.e;
    let counts = if block.bead_counts.iter().all(|&b| b >= block.weight) {
        block.bead_counts.clone()
    } else {
        let r = canonical_beads(&block.core, e, block.weight);
        Abacus::from_partition(&block.core, e, r)?.bead_counts()
    };
    let mut out = Vec::new();
    for quotient in multipartitions(e, block.weight) {
        out.push(RunnerNotation { quotient, counts: counts.clone() }.to_partition()?);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// All e-tuples of partitions of total size w.
pub fn multipartitions(e: usize, w: usize) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(e);
    fn go(e: usize, rest: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if cur.len() == e - 1 {
            for p in crate::partition::partitions_of(rest) {
                cur.push(p);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for k in (0..=rest).rev() {
            for p in crate::partition::partitions_of(k) {
                cur.push(p);
                go(e, rest - k, cur, out);
                cur.pop();
            }
        }
    }
    go(e, w, &mut cur, &mut out);
    out
}

/// Adjacent blocks A (lower) and B (upper) of equal weight whose cores
/// differ by the `k` removable nodes of residue `residue` on runner `runner`
/// of B's display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WkPair {
    pub lower: BlockDescriptor,
    pub upper: BlockDescriptor,
    pub k: usize,
    pub residue: usize,
    pub runner: usize,
}

impl WkPair {
    /// `w ≤ k`: every partition is non-exceptional.
    pub fn is_scopes(&self) -> bool {
        self.upper.weight <= self.k
    }
}

/// Every block A forming a [w:k]-pair with B as the upper block.
pub fn detect_wk_pairs(block: &BlockDescriptor) -> Result<Vec<WkPair>> {
    let e = block.e;
    let b = &block.bead_counts;
    let r = block.beads();
    let mut out = Vec::new();
    for i in 0..e {
        let (prev, extra) = if i == 0 { (e - 1, 1) } else { (i - 1, 0) };
        let Some(k) = b[i].checked_sub(b[prev] + extra).filter(|&k| k > 0) else { continue };
        let mut counts = b.clone();
        counts[i] = b[prev] + extra;
        counts[prev] = b[i] - extra;
        let lower = BlockDescriptor::from_counts(&counts, block.weight)?;
        let residue = (i + e - r % e) % e;
        out.push(WkPair { lower, upper: block.clone(), k, residue, runner: i });
    }
    Ok(out)
}

/// Whether λ is exceptional for the pair: in A this means ε_j(λ) > 0, in
/// B it means φ_j(λ) > 0.
pub fn is_exceptional(lambda: &Partition, pair: &WkPair) -> Result<bool> {
    let e = pair.upper.e;
    let (core, weight) = core_and_weight(lambda, e)?;
    let a = working_abacus(lambda, e)?;
    if weight == pair.lower.weight && core == pair.lower.core {
        Ok(a.epsilon(pair.residue) > 0)
    } else if weight == pair.upper.weight && core == pair.upper.core {
        Ok(a.phi(pair.residue) > 0)
    } else {
        Err(Error::PartitionNotInPair(lambda.to_string()))
    }
}

/// For all i < j, `b_i − b_j ≥ w` or `b_j − b_i ≥ w − 1`.
pub fn is_rouquier(block: &BlockDescriptor) -> bool {
    rouquier_deficit(&block.bead_counts, block.weight) == 0
}

/// How far a runner count vector is from the Rouquier condition.
fn rouquier_deficit(counts: &[usize], w: usize) -> usize {
    let (w, mut total) = (w as i64, 0i64);
    for i in 0..counts.len() {
        for j in i + 1..counts.len() {
            let d = counts[i] as i64 - counts[j] as i64;
            total += (w - d).min(w - 1 + d).max(0);
        }
    }
    total as usize
}

/// `φ_j(μ) − ε_j(μ)` when positive.
fn dot_f_k(a: &Abacus, j: usize) -> Option<usize> {
    a.phi(j).checked_sub(a.epsilon(j)).filter(|&k| k > 0)
}

/// Ḟ_j μ = F̃_j^k μ where k = φ_j(μ) − ε_j(μ) > 0.
pub fn dot_f(mu: &Partition, e: usize, j: usize) -> Result<Partition> {
    let a = working_abacus(mu, e)?;
    let j = j % e;
    let k = dot_f_k(&a, j).ok_or_else(|| Error::DotFUndefined { residue: j, partition: mu.to_string() })?;
    Ok(a.add_conormal(j, k)?.to_partition())
}

/// Ḟ_j↘_m μ: applies Ḟ with residues j, j−1, …, j−m+1 in turn.
pub fn dot_f_down(mu: &Partition, e: usize, j: usize, m: usize) -> Result<Partition> {
    (0..m).try_fold(mu.clone(), |acc, s| dot_f(&acc, e, (j + e * m - s) % e))
}

/// Ḟ_j↗^m μ: applies Ḟ with residues j, j+1, …, j+m−1 in turn.
pub fn dot_f_up(mu: &Partition, e: usize, j: usize, m: usize) -> Result<Partition> {
    (0..m).try_fold(mu.clone(), |acc, s| dot_f(&acc, e, (j + s) % e))
}

/// Applies Ḟ along `residues` (first entry first). The flag is true when
/// every partition along the way is non-exceptional for its step.
pub fn semisimple_induction(lambda: &Partition, e: usize, residues: &[usize]) -> Result<(Partition, bool)> {
    let mut cur = lambda.clone();
    let mut semisimple = true;
    for &j in residues {
        let j = j % e;
        semisimple &= working_abacus(&cur, e)?.epsilon(j) == 0;
        cur = dot_f(&cur, e, j)?;
    }
    Ok((cur, semisimple))
}

/// One semisimple Ḟ step when it exists: `(residue, Ḟ_j λ)`.
pub fn semisimple_steps(lambda: &Partition, e: usize) -> Result<Vec<(usize, Partition)>> {
    let a = working_abacus(lambda, e)?;
    let mut out = Vec::new();
    for j in 0..e {
        if a.epsilon(j) == 0 {
            if let Some(k) = dot_f_k(&a, j) {
                out.push((j, a.add_conormal(j, k)?.to_partition()));
            }
        }
    }
    Ok(out)
}

/// Default step budget for [`find_rouquier_path`].
pub fn default_rouquier_budget(e: usize) -> usize {
    8 * e
}

/// A residue list along which λ induces semisimply into a Rouquier block,
/// found by best-first search over at most `max_steps` Ḟ steps. `None`
/// means the search gave up, not that no path exists.
pub fn find_rouquier_path(lambda: &Partition, e: usize, max_steps: usize) -> Result<Option<Vec<usize>>> {
    use std::collections::{BinaryHeap, HashSet};
    use std::cmp::Reverse;
    const MAX_EXPANSIONS: usize = 20_000;
    let w = working_abacus(lambda, e)?.weight();
    let deficit = |p: &Partition| -> Result<usize> {
        Ok(rouquier_deficit(&working_abacus(p, e)?.core().bead_counts(), w))
    };
    let mut heap = BinaryHeap::new();
    let mut seen = HashSet::new();
    let mut paths: Vec<Vec<usize>> = vec![Vec::new()];
    heap.push(Reverse((deficit(lambda)?, 0usize, lambda.clone())));
    seen.insert(lambda.clone());
    let mut expansions = 0;
    while let Some(Reverse((d, id, cur))) = heap.pop() {
        if d == 0 {
            return Ok(Some(paths[id].clone()));
        }
        expansions += 1;
        if paths[id].len() >= max_steps || expansions > MAX_EXPANSIONS {
            continue;
        }
        for (j, next) in semisimple_steps(&cur, e)? {
            if seen.insert(next.clone()) {
                let mut path = paths[id].clone();
                path.push(j);
                paths.push(path);
                heap.push(Reverse((deficit(&next)?, paths.len() - 1, next)));
            }
        }
    }
    Ok(None)
}

/// A residue list along which λ induces semisimply to exactly `target`.
/// Cores only grow along Ḟ steps, so the search is confined to partitions
/// whose core fits inside the core of `target`.
pub fn find_semisimple_path_to(lambda: &Partition, target: &Partition, e: usize) -> Result<Option<Vec<usize>>> {
    use std::collections::{HashMap, VecDeque};
    let goal_core = crate::abacus::e_core(target, e)?;
    let fits = |p: &Partition| -> Result<bool> {
        let core = crate::abacus::e_core(p, e)?;
        Ok(core.len() <= goal_core.len() && (0..core.len()).all(|i| core.part(i) <= goal_core.part(i)))
    };
    if !fits(lambda)? || lambda.size() > target.size() {
        return Ok(None);
    }
    let mut parent: HashMap<Partition, Option<(Partition, usize)>> = HashMap::from([(lambda.clone(), None)]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == target {
            let mut path = Vec::new();
            let mut at = cur;
            while let Some(Some((prev, j))) = parent.get(&at).cloned() {
                path.push(j);
                at = prev;
            }
            path.reverse();
            return Ok(Some(path));
        }
        for (j, next) in semisimple_steps(&cur, e)? {
            if next.size() <= target.size() && !parent.contains_key(&next) && fits(&next)? {
                parent.insert(next.clone(), Some((cur.clone(), j)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Partitions obtained by adding (`add = true`) or removing `k` nodes of
/// residue `j`, each with multiplicity k!.
fn branch_weyl(lambda: &Partition, e: usize, j: usize, k: usize, add: bool) -> Result<Vec<(Partition, u64)>> {
    let a = Abacus::from_partition(lambda, e, lambda.len() + 1)?;
    let j = j % e;
    let spots = if add { a.addable(j) } else { a.removable(j) };
    let mult: u64 = (1..=k as u64).product();
    let mut out = Vec::new();
    for combo in combinations(&spots, k) {
        let moved = combo.iter().fold(a.clone(), |acc, &p| if add { acc.moved(p - 1, p) } else { acc.moved(p, p - 1) });
        out.push((moved.to_partition(), mult));
    }
    out.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    Ok(out)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = combinations(&items[1..], k - 1);
    for c in &mut out {
        c.insert(0, items[0]);
    }
    out.extend(combinations(&items[1..], k));
    out
}

/// `W^λ↑` into the block reached by adding k residue-j nodes.
pub fn induce_weyl(lambda: &Partition, e: usize, j: usize, k: usize) -> Result<Vec<(Partition, u64)>> {
    branch_weyl(lambda, e, j, k, true)
}

/// `W^λ↓` into the block reached by removing k residue-j nodes.
pub fn restrict_weyl(lambda: &Partition, e: usize, j: usize, k: usize) -> Result<Vec<(Partition, u64)>> {
    branch_weyl(lambda, e, j, k, false)
}

/// The shape of `L^λ↑` or `L^λ↓` across k residue-j nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimpleBranch {
    Zero,
    /// The module is `(L^ν)^{⊕m}`.
    Exact(Partition, u64),
    /// Only the socle `(L^ν)^{⊕m}` is known.
    SocleOnly(Partition, u64),
}

fn branch_simple(lambda: &Partition, e: usize, j: usize, k: usize, add: bool) -> Result<SimpleBranch> {
    let a = working_abacus(lambda, e)?;
    let j = j % e;
    let avail = if add { a.phi(j) } else { a.epsilon(j) };
    if avail < k {
        return Ok(SimpleBranch::Zero);
    }
    let nu = if add { a.add_conormal(j, k)? } else { a.remove_normal(j, k)? }.to_partition();
    let mult: u64 = (1..=k as u64).product();
    Ok(if avail == k { SimpleBranch::Exact(nu, mult) } else { SimpleBranch::SocleOnly(nu, mult) })
}

/// `L^λ↑` across k residue-j nodes.
pub fn induce_simple(lambda: &Partition, e: usize, j: usize, k: usize) -> Result<SimpleBranch> {
    branch_simple(lambda, e, j, k, true)
}

/// `L^λ↓` across k residue-j nodes.
pub fn restrict_simple(lambda: &Partition, e: usize, j: usize, k: usize) -> Result<SimpleBranch> {
    branch_simple(lambda, e, j, k, false)
}

/// How an adjustment entry is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Computed from Determined decomposition numbers or a solver rule.
    Determined,
    /// Not machine-checkable here; taken as δ under James's conjecture
    /// because w < p.
    AssumedConjecture,
    Unknown,
}

/// One entry of an adjustment matrix. `value` is `None` only when the
/// provenance is [`Provenance::Unknown`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AdjustmentEntry {
    pub value: Option<i64>,
    pub provenance: Provenance,
}

/// The matrix A with `D = D⁰·A` on a block, rows and columns indexed by
/// the block partitions in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjustmentMatrix {
    pub block: BlockDescriptor,
    pub field: FieldSpec,
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<AdjustmentEntry>>,
}

impl AdjustmentMatrix {
    /// Determined entries that differ from δ, as `(λ, μ, value)`.
    pub fn delta_violations(&self) -> Vec<(Partition, Partition, i64)> {
        let mut out = Vec::new();
        for (r, row) in self.entries.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                if let (Provenance::Determined, Some(v)) = (entry.provenance, entry.value) {
                    if v != i64::from(r == c) {
                        out.push((self.partitions[r].clone(), self.partitions[c].clone(), v));
                    }
                }
            }
        }
        out
    }

    pub fn count(&self, provenance: Provenance) -> usize {
        self.entries.iter().flatten().filter(|x| x.provenance == provenance).count()
    }

    /// The Hecke algebra adjustment matrix: rows and columns restricted to
    /// e-regular partitions.
    pub fn hecke(&self) -> Result<AdjustmentMatrix> {
        let mut keep = Vec::new();
        for (i, lambda) in self.partitions.iter().enumerate() {
            if lambda.is_e_regular(self.block.e)? {
                keep.push(i);
            }
        }
        Ok(AdjustmentMatrix {
            block: self.block.clone(),
            field: self.field,
            partitions: keep.iter().map(|&i| self.partitions[i].clone()).collect(),
            entries: keep.iter().map(|&r| keep.iter().map(|&c| self.entries[r][c]).collect()).collect(),
        })
    }
}

/// The adjustment matrix of a block over the given field.
pub fn adjustment_matrix(block: &BlockDescriptor, field: FieldSpec) -> Result<AdjustmentMatrix> {
    let mut solver = Solver::new(block.e, field)?;
    adjustment_matrix_with(&mut solver, block)
}

/// As [`adjustment_matrix`], reusing a solver's memo tables.
pub fn adjustment_matrix_with(solver: &mut Solver, block: &BlockDescriptor) -> Result<AdjustmentMatrix> {
    let solved = solve_block_with(solver, block)?;
    let parts = &solved.partitions;
    let n = parts.len();
    let mut d0 = vec![vec![0i64; n]; n];
    for (c, mu) in parts.iter().enumerate() {
        for (r, lambda) in parts.iter().enumerate().skip(c) {
            d0[r][c] = solver.v_decomposition(lambda, mu)?.eval_one();
        }
    }
    let p = solver.field().characteristic();
    let assume = p == 0 || (block.weight as u64) < p;
    let mut order = JantzenOrder::new(block.e, canonical_beads(&block.core, block.e, block.weight));
    let mut entries = vec![vec![AdjustmentEntry { value: None, provenance: Provenance::Unknown }; n]; n];
    for c in 0..n {
        let column: Option<Vec<i64>> = solved.decomposition.iter().map(|row| row[c].value()).collect();
        if let Some(d) = column {
            // D⁰ is lower unitriangular in this order, so forward substitution
            // recovers the column of A exactly.
            let mut a = vec![0i64; n];
            for r in 0..n {
                a[r] = d[r] - (0..r).map(|k| d0[r][k] * a[k]).sum::<i64>();
                if a[r] < 0 || (r == c && a[r] != 1) || (r < c && a[r] != 0) {
                    return Err(Error::NonIntegralSolution(parts[r].to_string(), parts[c].to_string()));
                }
                if a[r] != 0 && !order.leq(&parts[r], &parts[c])? {
                    return Err(Error::PreconditionViolated(format!(
                        "adj({}, {}) = {} but the pair is not Jantzen-ordered",
                        parts[r], parts[c], a[r]
                    )));
                }
                if let Some(v) = solved.adjustment[r][c].value() {
                    if v != a[r] {
                        return Err(Error::PreconditionViolated(format!(
                            "solver adj({}, {}) = {v} disagrees with back-substitution {}",
                            parts[r], parts[c], a[r]
                        )));
                    }
                }
                entries[r][c] = AdjustmentEntry { value: Some(a[r]), provenance: Provenance::Determined };
            }
            continue;
        }
        for r in 0..n {
            entries[r][c] = match solved.adjustment[r][c] {
                SolverCell::Determined(v) => AdjustmentEntry { value: Some(v), provenance: Provenance::Determined },
                SolverCell::Unknown { .. } if assume => {
                    AdjustmentEntry { value: Some(i64::from(r == c)), provenance: Provenance::AssumedConjecture }
                }
                SolverCell::Unknown { .. } => AdjustmentEntry { value: None, provenance: Provenance::Unknown },
            };
        }
    }
    Ok(AdjustmentMatrix { block: block.clone(), field: solver.field(), partitions: solved.partitions, entries })
}
