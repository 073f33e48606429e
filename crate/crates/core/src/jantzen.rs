//! Jantzen–Schaper coefficients and bounds, and a decomposition-number
//! solver for arbitrary characteristic built on them.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::abacus::{relative_e_sign, working_abacus};
use crate::blocks::{self, canonical_beads, core_and_weight, BlockDescriptor};
use crate::error::{Error, Result};
use crate::fock::DecompositionContext;
use crate::orders::{jantzen_successors, JantzenOrder};
use crate::partition::Partition;
use crate::poly::VPolynomial;

/// The characteristic of the ground field: 0 or a prime below 2³¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if p != 0 && (p >= 1 << 31 || !is_prime(p)) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(FieldSpec { p })
    }

    /// Characteristic zero.
    pub fn complex() -> Self {
        FieldSpec { p: 0 }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// v_p(x); identically zero in characteristic 0.
    pub fn valuation(&self, mut x: u64) -> u32 {
        if self.p == 0 || x == 0 {
            return 0;
        }
        let mut v = 0;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Bead count fitting every partition of λ's block.
fn block_beads(lambda: &Partition, e: usize) -> Result<usize> {
    let (core, w) = core_and_weight(lambda, e)?;
    Ok(canonical_beads(&core, e, w))
}

/// The nonzero Jantzen–Schaper coefficients `J_F(λ, τ)`, keyed by τ.
pub fn js_row(lambda: &Partition, e: usize, field: FieldSpec) -> Result<BTreeMap<Partition, i64>> {
    let r = block_beads(lambda, e)?;
    let mut out = BTreeMap::new();
    for (tau, moves) in jantzen_successors(lambda, e, r)? {
        let j: i64 = moves.iter().map(|m| m.sign() * (1 + field.valuation(m.h() as u64) as i64)).sum();
        if j != 0 {
            out.insert(tau, j);
        }
    }
    Ok(out)
}

/// `J_F(λ, τ)`: the signed sum over all witnessing moves λ → τ.
pub fn js_coefficient(lambda: &Partition, tau: &Partition, e: usize, field: FieldSpec) -> Result<i64> {
    if lambda.size() != tau.size() {
        return Ok(0);
    }
    Ok(js_row(lambda, e, field)?.get(tau).copied().unwrap_or(0))
}

/// `B_ℂ(λ, μ) = Σ_τ J(λ, τ) d_{τμ}(1)` using a shared decomposition context.
pub fn js_bound_c_with(ctx: &mut DecompositionContext, lambda: &Partition, mu: &Partition) -> Result<i64> {
    let e = ctx.e();
    let column = ctx.column(mu)?;
    Ok(js_row(lambda, e, FieldSpec::complex())?
        .iter()
        .map(|(tau, j)| j * column.get(tau).map_or(0, VPolynomial::eval_one))
        .sum())
}

/// `B_ℂ(λ, μ)`.
pub fn js_bound_c(lambda: &Partition, mu: &Partition, e: usize) -> Result<i64> {
    js_bound_c_with(&mut DecompositionContext::new(e)?, lambda, mu)
}

/// A pair where `(d/dv) d_{λμ}(v)` at 1 differs from `B_ℂ(λ, μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeMismatch {
    pub lambda: Partition,
    pub mu: Partition,
    pub derivative: i64,
    pub bound: i64,
}

/// Compares the derivative of every v-decomposition number of the block at
/// v = 1 with the Jantzen–Schaper bound over ℂ.
pub fn derivative_check(block: &BlockDescriptor) -> Result<Vec<DerivativeMismatch>> {
    derivative_check_with(&mut DecompositionContext::new(block.e)?, block)
}

pub fn derivative_check_with(ctx: &mut DecompositionContext, block: &BlockDescriptor) -> Result<Vec<DerivativeMismatch>> {
    let parts = blocks::enumerate_block(block)?;
    let columns: Vec<_> = parts.iter().map(|mu| ctx.column(mu)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for lambda in &parts {
        let row = js_row(lambda, block.e, FieldSpec::complex())?;
        for (mu, col) in parts.iter().zip(&columns) {
            let bound: i64 = row.iter().map(|(t, j)| j * col.get(t).map_or(0, VPolynomial::eval_one)).sum();
            let derivative = col.get(lambda).map_or(0, VPolynomial::derivative_at_one);
            if bound != derivative {
                out.push(DerivativeMismatch { lambda: lambda.clone(), mu: mu.clone(), derivative, bound });
            }
        }
    }
    Ok(out)
}

/// What the solver knows about one decomposition number or adjustment entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverCell {
    Determined(i64),
    Unknown { lower: i64, upper: i64 },
}

impl SolverCell {
    pub fn value(&self) -> Option<i64> {
        match self {
            SolverCell::Determined(v) => Some(*v),
            SolverCell::Unknown { .. } => None,
        }
    }

    pub fn is_determined(&self) -> bool {
        matches!(self, SolverCell::Determined(_))
    }
}

impl fmt::Display for SolverCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverCell::Determined(v) => write!(f, "{v}"),
            SolverCell::Unknown { lower, upper } if *upper >= INF => write!(f, "[{lower},inf)"),
            SolverCell::Unknown { lower, upper } => write!(f, "[{lower},{upper}]"),
        }
    }
}

/// Stand-in for an unbounded upper end.
const INF: i64 = i64::MAX / 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    lo: i64,
    hi: i64,
}

impl Interval {
    const ANY: Interval = Interval { lo: 0, hi: INF };

    fn exact(v: i64) -> Self {
        Interval { lo: v, hi: v }
    }

    fn meet(self, other: Interval) -> Interval {
        Interval { lo: self.lo.max(other.lo), hi: self.hi.min(other.hi) }
    }

    fn add(self, other: Interval) -> Interval {
        Interval { lo: clamp(self.lo + other.lo), hi: clamp(self.hi.saturating_add(other.hi)) }
    }

    fn scale(self, c: i64) -> Interval {
        let (a, b) = (clamp(self.lo.saturating_mul(c)), clamp(self.hi.saturating_mul(c)));
        Interval { lo: a.min(b), hi: a.max(b) }
    }

    fn is_exact(self) -> bool {
        self.lo == self.hi
    }

    fn cell(self) -> SolverCell {
        if self.is_exact() {
            SolverCell::Determined(self.lo)
        } else {
            SolverCell::Unknown { lower: self.lo, upper: self.hi }
        }
    }
}

fn clamp(x: i64) -> i64 {
    x.clamp(-INF, INF)
}

/// Search limits for the solver's induction-based rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Ḟ steps allowed when looking for a Rouquier block.
    pub rouquier_steps: usize,
    /// Ḟ steps allowed when transporting a pair to one a removal rule handles.
    pub transport_steps: usize,
}

impl SolverOptions {
    pub fn for_e(e: usize) -> Self {
        SolverOptions { rouquier_steps: blocks::default_rouquier_budget(e), transport_steps: 2 * e }
    }
}

/// Per-block data shared by every cell of the block.
#[derive(Debug)]
struct BlockData {
    weight: usize,
    order: JantzenOrder,
    rouquier: bool,
}

/// Recursive decomposition-number solver over one field and one e.
///
/// Decomposition numbers `d = [W^λ:L^μ]` and, in positive characteristic,
/// adjustment entries `a` are tracked as intervals linked by
/// `d_{λμ} = Σ_ν d⁰_{λν} a_{νμ}` with every `a ≥ 0`. Rules:
///
/// - `d = 0` unless λ ≤_J μ; `d ≤ B_F`, and `d = 0` iff `B_F = 0`;
/// - row and column removal when `λ₁ = μ₁` or `l(λ) = l(μ)`;
/// - over ℂ, the parity of `d(v)` bounds `d(1)` by `B_ℂ` or `B_ℂ / 2`;
/// - in characteristic p: weight ≤ 1 blocks; Rouquier blocks with w < p;
///   lowerable pairs and equal-ε / equal-φ transport; the `{0, v}` rule;
///   semisimple induction to a Rouquier block or to a pair where a
///   removal rule reaches a block of smaller weight.
#[derive(Debug)]
pub struct Solver {
    e: usize,
    field: FieldSpec,
    options: SolverOptions,
    dec: DecompositionContext,
    columns: HashMap<Partition, BTreeMap<Partition, VPolynomial>>,
    blocks: HashMap<(Partition, usize), BlockData>,
    js: HashMap<Partition, BTreeMap<Partition, i64>>,
    d_memo: HashMap<(Partition, Partition), Interval>,
    a_memo: HashMap<(Partition, Partition), Interval>,
    rouquier_memo: HashMap<Partition, bool>,
    active: HashSet<(Partition, Partition)>,
}

impl Solver {
    pub fn new(e: usize, field: FieldSpec) -> Result<Self> {
        Self::with_options(e, field, SolverOptions::for_e(e))
    }

    pub fn with_options(e: usize, field: FieldSpec, options: SolverOptions) -> Result<Self> {
        Ok(Solver {
            e,
            field,
            options,
            dec: DecompositionContext::new(e)?,
            columns: HashMap::new(),
            blocks: HashMap::new(),
            js: HashMap::new(),
            d_memo: HashMap::new(),
            a_memo: HashMap::new(),
            rouquier_memo: HashMap::new(),
            active: HashSet::new(),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `[W^λ_F : L^μ_F]` as far as the rules determine it.
    pub fn decomposition(&mut self, lambda: &Partition, mu: &Partition) -> Result<SolverCell> {
        Ok(self.d(lambda, mu)?.cell())
    }

    /// `adj_{λμ}` as far as the rules determine it (always δ over ℂ).
    pub fn adjustment(&mut self, lambda: &Partition, mu: &Partition) -> Result<SolverCell> {
        Ok(self.a(lambda, mu)?.cell())
    }

    /// The Jantzen–Schaper bound `B_F(λ, μ)` as an interval, from the
    /// solver's current knowledge of the column of μ.
    pub fn bound(&mut self, lambda: &Partition, mu: &Partition) -> Result<SolverCell> {
        Ok(self.bound_interval(lambda, mu)?.cell())
    }

    /// d⁰_{λμ}(v).
    pub fn v_decomposition(&mut self, lambda: &Partition, mu: &Partition) -> Result<VPolynomial> {
        Ok(self.column(mu)?.get(lambda).cloned().unwrap_or_default())
    }

    /// Installs a column of d⁰ computed elsewhere, e.g. read from a cache.
    pub fn seed_column(&mut self, mu: Partition, column: BTreeMap<Partition, VPolynomial>) {
        self.dec.seed_column(mu.clone(), column.clone());
        self.columns.insert(mu, column);
    }

    fn column(&mut self, mu: &Partition) -> Result<&BTreeMap<Partition, VPolynomial>> {
        if !self.columns.contains_key(mu) {
            let col = self.dec.column(mu)?;
            self.columns.insert(mu.clone(), col);
        }
        Ok(&self.columns[mu])
    }

    fn d0(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.column(mu)?.get(lambda).map_or(0, VPolynomial::eval_one))
    }

    fn block_key(&self, lambda: &Partition) -> Result<(Partition, usize)> {
        core_and_weight(lambda, self.e)
    }

    fn block(&mut self, lambda: &Partition) -> Result<&mut BlockData> {
        let key = self.block_key(lambda)?;
        if !self.blocks.contains_key(&key) {
            let r = canonical_beads(&key.0, self.e, key.1);
            let descriptor = blocks::block_of_with_beads(lambda, self.e, r)?;
            let data = BlockData {
                weight: key.1,
                order: JantzenOrder::new(self.e, r),
                rouquier: blocks::is_rouquier(&descriptor),
            };
            self.blocks.insert(key.clone(), data);
        }
        Ok(self.blocks.get_mut(&key).expect("inserted above"))
    }

    fn weight(&mut self, lambda: &Partition) -> Result<usize> {
        Ok(self.block(lambda)?.weight)
    }

    fn same_block(&self, lambda: &Partition, mu: &Partition) -> Result<bool> {
        Ok(lambda.size() == mu.size() && self.block_key(lambda)? == self.block_key(mu)?)
    }

    /// λ ≤_J μ within one block.
    fn jleq(&mut self, lambda: &Partition, mu: &Partition) -> Result<bool> {
        if !self.same_block(lambda, mu)? {
            return Ok(false);
        }
        self.block(lambda)?.order.leq(lambda, mu)
    }

    /// ν with λ <_J ν ≤_J μ, in descending lexicographic order.
    fn between(&mut self, lambda: &Partition, mu: &Partition) -> Result<Vec<Partition>> {
        let up: Vec<Partition> = self.block(lambda)?.order.up_set(lambda)?.iter().cloned().collect();
        let mut out = Vec::new();
        for nu in up {
            if &nu != lambda && self.jleq(&nu, mu)? {
                out.push(nu);
            }
        }
        out.sort_unstable_by(|x, y| y.cmp(x));
        Ok(out)
    }

    fn js(&mut self, lambda: &Partition) -> Result<BTreeMap<Partition, i64>> {
        if !self.js.contains_key(lambda) {
            let row = js_row(lambda, self.e, self.field)?;
            self.js.insert(lambda.clone(), row);
        }
        Ok(self.js[lambda].clone())
    }

    fn bound_interval(&mut self, lambda: &Partition, mu: &Partition) -> Result<Interval> {
        let mut b = Interval::exact(0);
        for (tau, j) in self.js(lambda)? {
            b = b.add(self.d(&tau, mu)?.scale(j));
        }
        Ok(Interval { lo: b.lo.max(0), hi: b.hi })
    }

    fn d(&mut self, lambda: &Partition, mu: &Partition) -> Result<Interval> {
        if lambda == mu {
            return Ok(Interval::exact(1));
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(&v) = self.d_memo.get(&key) {
            return Ok(v);
        }
        if !self.jleq(lambda, mu)? {
            return Ok(Interval::exact(0));
        }
        if !self.active.insert(key.clone()) {
            return Ok(Interval::ANY);
        }
        let result = self.compute_d(lambda, mu);
        self.active.remove(&key);
        let v = result?;
        self.d_memo.insert(key, v);
        Ok(v)
    }

    fn a(&mut self, lambda: &Partition, mu: &Partition) -> Result<Interval> {
        if lambda == mu {
            return Ok(Interval::exact(1));
        }
        if self.field.p == 0 || !self.jleq(lambda, mu)? {
            return Ok(Interval::exact(0));
        }
        self.d(lambda, mu)?;
        Ok(self.a_memo.get(&(lambda.clone(), mu.clone())).copied().unwrap_or(Interval::ANY))
    }

    fn compute_d(&mut self, lambda: &Partition, mu: &Partition) -> Result<Interval> {
        let positive = self.field.p > 0;
        // d = a_{λμ} + rest, rest = Σ_{λ<ν≤μ} d⁰_{λν} a_{νμ}.
        let (mut a, rest) = if positive {
            let a = self.adjustment_rules(lambda, mu)?;
            let mut rest = Interval::exact(0);
            for nu in self.between(lambda, mu)? {
                let d0 = self.d0(lambda, &nu)?;
                if d0 != 0 {
                    rest = rest.add(self.a(&nu, mu)?.scale(d0));
                }
            }
            (a, rest)
        } else {
            (Interval::exact(0), Interval::ANY)
        };
        let mut d = if positive { a.add(rest) } else { Interval::ANY };

        if lambda.part(0) == mu.part(0) {
            d = d.meet(self.d(&lambda.row_removal()?, &mu.row_removal()?)?);
        }
        if lambda.len() == mu.len() {
            d = d.meet(self.d(&lambda.column_removal()?, &mu.column_removal()?)?);
        }

        let b = self.bound_interval(lambda, mu)?;
        if b.hi <= 0 {
            d = d.meet(Interval::exact(0));
        } else {
            d.hi = d.hi.min(b.hi);
            if b.lo >= 1 {
                d.lo = d.lo.max(1);
            }
        }

        if !positive {
            let same = relative_e_sign(lambda, self.e)? == relative_e_sign(mu, self.e)?;
            if same {
                d.hi = d.hi.min(b.hi / 2);
            } else if b.is_exact() && (d.lo - b.lo) % 2 != 0 {
                d.lo += 1;
            }
            if !same && b.is_exact() && (d.hi - b.lo) % 2 != 0 {
                d.hi -= 1;
            }
        } else {
            a = a.meet(Interval { lo: clamp(d.lo - rest.hi), hi: clamp(d.hi.saturating_sub(rest.lo)) });
            a.lo = a.lo.max(0);
            d = d.meet(a.add(rest));
            self.a_memo.insert((lambda.clone(), mu.clone()), a);
        }
        if d.lo > d.hi {
            return Err(Error::PreconditionViolated(format!(
                "solver rules contradict each other at ({lambda}, {mu})"
            )));
        }
        Ok(d)
    }

    /// Rules that bound `adj_{λμ}` directly, for λ <_J μ in characteristic p.
    fn adjustment_rules(&mut self, lambda: &Partition, mu: &Partition) -> Result<Interval> {
        let e = self.e;
        let p = self.field.p as usize;
        let w = self.weight(lambda)?;
        if w <= 1 {
            return Ok(Interval::exact(0));
        }
        if w < p && self.block(lambda)?.rouquier {
            return Ok(Interval::exact(0));
        }
        let la = working_abacus(lambda, e)?;
        let ma = working_abacus(mu, e)?;
        let mut a = Interval::ANY;
        for j in 0..e {
            let (el, em, fl, fm) = (la.epsilon(j), ma.epsilon(j), la.phi(j), ma.phi(j));
            if el < em || fl < fm {
                return Ok(Interval::exact(0));
            }
            if el == em && el > 0 {
                let (l2, m2) = (la.remove_normal(j, el)?.to_partition(), ma.remove_normal(j, el)?.to_partition());
                a = a.meet(self.a_across(&l2, &m2)?);
            }
            if fl == fm && fl > 0 && el > 0 {
                let (l2, m2) = (la.add_conormal(j, fl)?.to_partition(), ma.add_conormal(j, fl)?.to_partition());
                a = a.meet(self.a_across(&l2, &m2)?);
            }
            if a.is_exact() {
                return Ok(a);
            }
        }
        if lambda.part(0) == mu.part(0) {
            a = a.meet(self.a_across(&lambda.row_removal()?, &mu.row_removal()?)?);
        }
        if lambda.len() == mu.len() {
            a = a.meet(self.a_across(&lambda.column_removal()?, &mu.column_removal()?)?);
        }
        if a.is_exact() {
            return Ok(a);
        }
        if w < p {
            let v = self.v_decomposition(lambda, mu)?;
            if v.is_zero() || v == VPolynomial::monomial(1, 1) {
                let mut all_zero = true;
                for nu in self.between(lambda, mu)? {
                    if &nu != mu && self.a(&nu, mu)? != Interval::exact(0) {
                        all_zero = false;
                        break;
                    }
                }
                if all_zero {
                    return Ok(Interval::exact(0));
                }
            }
            if self.induces_to_rouquier(lambda)? {
                return Ok(Interval::exact(0));
            }
        }
        if let Some(v) = self.transport(lambda, mu, w)? {
            a = a.meet(v);
        }
        Ok(a)
    }

    /// `adj` for a pair produced by a reduction rule; distinct blocks give 0.
    fn a_across(&mut self, lambda: &Partition, mu: &Partition) -> Result<Interval> {
        if lambda == mu {
            return Ok(Interval::exact(1));
        }
        if !self.same_block(lambda, mu)? {
            return Ok(Interval::exact(0));
        }
        self.a(lambda, mu)
    }

    fn induces_to_rouquier(&mut self, lambda: &Partition) -> Result<bool> {
        if let Some(&v) = self.rouquier_memo.get(lambda) {
            return Ok(v);
        }
        let found = blocks::find_rouquier_path(lambda, self.e, self.options.rouquier_steps)?.is_some();
        self.rouquier_memo.insert(lambda.clone(), found);
        Ok(found)
    }

    /// Induces λ and μ semisimply along common residues until the pair is
    /// lowerable or a removal rule lands in a block of weight below `w`.
    fn transport(&mut self, lambda: &Partition, mu: &Partition, w: usize) -> Result<Option<Interval>> {
        let e = self.e;
        let mut frontier = vec![(lambda.clone(), mu.clone())];
        let mut seen: HashSet<(Partition, Partition)> = HashSet::new();
        for _ in 0..self.options.transport_steps {
            let mut next = Vec::new();
            for (l, m) in frontier {
                let la = working_abacus(&l, e)?;
                let ma = working_abacus(&m, e)?;
                for j in 0..e {
                    let Some(k) = la.phi(j).checked_sub(la.epsilon(j)).filter(|&k| k > 0) else { continue };
                    if la.epsilon(j) != 0 {
                        continue;
                    }
                    if ma.epsilon(j) != 0 {
                        // λ non-exceptional, μ exceptional.
                        return Ok(Some(Interval::exact(0)));
                    }
                    let l2 = la.add_conormal(j, k)?.to_partition();
                    let m2 = ma.add_conormal(j, k)?.to_partition();
                    if !seen.insert((l2.clone(), m2.clone())) {
                        continue;
                    }
                    if let Some(v) = self.transport_target(&l2, &m2, w)? {
                        return Ok(Some(v));
                    }
                    next.push((l2, m2));
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(None)
    }

    /// Rules applied at the far end of a transport.
    fn transport_target(&mut self, lambda: &Partition, mu: &Partition, w: usize) -> Result<Option<Interval>> {
        let e = self.e;
        let p = self.field.p as usize;
        let la = working_abacus(lambda, e)?;
        let ma = working_abacus(mu, e)?;
        for j in 0..e {
            if la.epsilon(j) < ma.epsilon(j) || la.phi(j) < ma.phi(j) {
                return Ok(Some(Interval::exact(0)));
            }
        }
        if w < p && self.block(lambda)?.rouquier {
            return Ok(Some(Interval::exact(0)));
        }
        let mut reductions = Vec::new();
        if lambda.part(0) == mu.part(0) {
            reductions.push((lambda.row_removal()?, mu.row_removal()?));
        }
        if lambda.len() == mu.len() {
            reductions.push((lambda.column_removal()?, mu.column_removal()?));
        }
        for j in 0..e {
            let k = la.epsilon(j);
            if k > 0 && ma.epsilon(j) == k {
                reductions.push((la.remove_normal(j, k)?.to_partition(), ma.remove_normal(j, k)?.to_partition()));
            }
        }
        for (l2, m2) in reductions {
            if l2 == m2 {
                return Ok(Some(Interval::exact(1)));
            }
            if !self.same_block(&l2, &m2)? {
                return Ok(Some(Interval::exact(0)));
            }
            if self.weight(&l2)? < w {
                let v = self.a(&l2, &m2)?;
                if v.is_exact() {
                    return Ok(Some(v));
                }
            }
        }
        Ok(None)
    }
}

/// The solver's view of a whole block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvedBlock {
    pub block: BlockDescriptor,
    pub field: FieldSpec,
    /// Block partitions in descending lexicographic order.
    pub partitions: Vec<Partition>,
    /// `decomposition[row][col] = [W^row : L^col]`.
    pub decomposition: Vec<Vec<SolverCell>>,
    /// `adjustment[row][col] = adj_{row,col}`.
    pub adjustment: Vec<Vec<SolverCell>>,
}

/// Runs the solver over every cell of a block.
pub fn solve_decomposition(block: &BlockDescriptor, field: FieldSpec) -> Result<SolvedBlock> {
    let mut solver = Solver::new(block.e, field)?;
    solve_block_with(&mut solver, block)
}

/// As [`solve_decomposition`], reusing a solver's memo tables.
pub fn solve_block_with(solver: &mut Solver, block: &BlockDescriptor) -> Result<SolvedBlock> {
    let partitions = blocks::enumerate_block(block)?;
    let n = partitions.len();
    let mut decomposition = vec![vec![SolverCell::Determined(0); n]; n];
    let mut adjustment = vec![vec![SolverCell::Determined(0); n]; n];
    for (c, mu) in partitions.iter().enumerate() {
        for (r, lambda) in partitions.iter().enumerate() {
            decomposition[r][c] = solver.decomposition(lambda, mu)?;
            adjustment[r][c] = solver.adjustment(lambda, mu)?;
        }
    }
    Ok(SolvedBlock { block: block.clone(), field: solver.field(), partitions, decomposition, adjustment })
}
