//! Induced e-sequences, the product order, single Jantzen moves and the
//! Jantzen order.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::abacus::Abacus;
use crate::blocks::core_and_weight;
use crate::error::Result;
use crate::partition::Partition;

/// A witnessed Jantzen move λ → σ → τ: the bead at `a` moves up `i` rows
/// to `a - ie`, giving σ; then the bead at `b - ie` moves down to `b`,
/// giving τ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JantzenMove {
    pub a: usize,
    pub b: usize,
    pub i: usize,
    /// Occupied positions strictly between `a - ie` and `a` in λ.
    pub l_up: usize,
    /// Occupied positions strictly between `b - ie` and `b` in τ.
    pub l_down: usize,
}

impl JantzenMove {
    /// The hook length factor h, equal to the row count i.
    pub fn h(&self) -> usize {
        self.i
    }

    /// `l_up + l_down + 1` is odd: the move contributes with sign −1.
    pub fn sign(&self) -> i64 {
        if (self.l_up + self.l_down + 1) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// The multiset of positions `a, a-e, …, a-(w_a-1)e` over all beads `a` of
/// positive weight, sorted weakly decreasing.
pub fn induced_e_sequence(lambda: &Partition, e: usize, r: usize) -> Result<Vec<usize>> {
    let ab = Abacus::from_partition(lambda, e, r)?;
    Ok(sequence_of(&ab))
}

fn sequence_of(ab: &Abacus) -> Vec<usize> {
    let e = ab.e();
    let mut out = Vec::new();
    for a in ab.beta() {
        let w = ab.bead_weight(a);
        out.extend((0..w).map(|k| a - k * e));
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// A bead count at which every partition of λ's and μ's blocks fits.
fn common_beads(lambda: &Partition, mu: &Partition, e: usize) -> usize {
    let r = lambda.len().max(mu.len()) + 1;
    r.div_ceil(e) * e
}

/// λ ≤_P μ: same e-core and weight, and s(μ)_r ≥ s(λ)_r componentwise.
pub fn product_leq(lambda: &Partition, mu: &Partition, e: usize) -> Result<bool> {
    product_leq_at(lambda, mu, e, common_beads(lambda, mu, e))
}

/// λ ≤_P μ compared at an explicit bead count `r ≥ l(λ), l(μ)`.
pub fn product_leq_at(lambda: &Partition, mu: &Partition, e: usize, r: usize) -> Result<bool> {
    if lambda.size() != mu.size() || core_and_weight(lambda, e)? != core_and_weight(mu, e)? {
        return Ok(false);
    }
    let s = induced_e_sequence(lambda, e, r)?;
    let t = induced_e_sequence(mu, e, r)?;
    Ok(s.len() == t.len() && s.iter().zip(&t).all(|(x, y)| x <= y))
}

/// All τ with λ → τ, each with every witnessing move, in increasing order
/// of τ.
pub fn jantzen_successors(
    lambda: &Partition,
    e: usize,
    r: usize,
) -> Result<Vec<(Partition, Vec<JantzenMove>)>> {
    let ab = Abacus::from_partition(lambda, e, r)?;
    let mut out: BTreeMap<Partition, Vec<JantzenMove>> = BTreeMap::new();
    for a in ab.beta() {
        for i in 1..=a / e {
            let top = a - i * e;
            if ab.is_occupied(top) {
                continue;
            }
            let l_up = ab.occupied_between(top, a);
            let sigma = ab.moved(a, top);
            for b in a + 1..=sigma.extent() + i * e {
                let from = b - i * e;
                if !sigma.is_occupied(from) || sigma.is_occupied(b) {
                    continue;
                }
                let tau = sigma.moved(from, b);
                let l_down = tau.occupied_between(from, b);
                out.entry(tau.to_partition()).or_default().push(JantzenMove { a, b, i, l_up, l_down });
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// λ ≤_J μ: μ is reachable from λ by a chain of Jantzen moves.
pub fn jantzen_leq(lambda: &Partition, mu: &Partition, e: usize) -> Result<bool> {
    if lambda == mu {
        return Ok(true);
    }
    let r = common_beads(lambda, mu, e);
    JantzenOrder::new(e, r).leq(lambda, mu)
}

/// Memoized successor lists for deciding ≤_J inside blocks.
#[derive(Debug)]
pub struct JantzenOrder {
    e: usize,
    r: usize,
    succ: HashMap<Partition, Vec<Partition>>,
    up: HashMap<Partition, HashSet<Partition>>,
}

impl JantzenOrder {
    /// `r` must be at least the length of every partition queried.
    pub fn new(e: usize, r: usize) -> Self {
        JantzenOrder { e, r, succ: HashMap::new(), up: HashMap::new() }
    }

    pub fn successors(&mut self, lambda: &Partition) -> Result<&[Partition]> {
        if !self.succ.contains_key(lambda) {
            let list = jantzen_successors(lambda, self.e, self.r)?.into_iter().map(|(t, _)| t).collect();
            self.succ.insert(lambda.clone(), list);
        }
        Ok(&self.succ[lambda])
    }

    /// Every μ with λ ≤_J μ, including λ.
    pub fn up_set(&mut self, lambda: &Partition) -> Result<&HashSet<Partition>> {
        if !self.up.contains_key(lambda) {
            let mut seen = HashSet::from([lambda.clone()]);
            let mut queue = VecDeque::from([lambda.clone()]);
            while let Some(x) = queue.pop_front() {
                for t in self.successors(&x)?.to_vec() {
                    if seen.insert(t.clone()) {
                        queue.push_back(t);
                    }
                }
            }
            self.up.insert(lambda.clone(), seen);
        }
        Ok(&self.up[lambda])
    }

    pub fn leq(&mut self, lambda: &Partition, mu: &Partition) -> Result<bool> {
        if lambda == mu {
            return Ok(true);
        }
        if lambda.size() != mu.size() || !mu.dominates_unchecked(lambda) {
            return Ok(false);
        }
        Ok(self.up_set(lambda)?.contains(mu))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn induced_sequences_of_worked_example() {
        assert_eq!(induced_e_sequence(&p("10,6,5,2,1,1"), 5, 10).unwrap(), vec![19, 14, 14, 12, 9]);
        assert_eq!(induced_e_sequence(&p("15,3,3,2,2"), 5, 10).unwrap(), vec![24, 19, 14, 11, 10]);
    }

    #[test]
    fn product_order_is_strictly_coarser_than_dominance_here() {
        let (l, m) = (p("10,6,5,2,1,1"), p("15,3,3,2,2"));
        assert!(m.dominates(&l).unwrap());
        assert!(!product_leq(&l, &m, 5).unwrap());
        assert!(product_leq(&l, &l, 5).unwrap());
    }

    #[test]
    fn core_has_no_successors() {
        assert!(jantzen_successors(&p("3,1,1"), 3, 6).unwrap().is_empty());
    }

    #[test]
    fn single_move_from_one_one() {
        let succ = jantzen_successors(&p("1,1"), 2, 2).unwrap();
        assert_eq!(succ.len(), 1);
        assert_eq!(succ[0].0, p("2"));
    }
}
