//! Abacus displays: cores, weights, relative signs, quotients, residues,
//! j-signatures and the crystal operators Ẽ_j, F̃_j.
//!
//! Residues are intrinsic to nodes: the node in row `r`, column `c` has
//! residue `(c - r) mod e`. On a display with `R` beads, position `p` carries
//! residue `(p - R) mod e`, so residue `j` lives on runner `(j + R) mod e`.

use crate::error::{Error, Result};
use crate::notation::RunnerNotation;
use crate::partition::{check_e, Partition};

/// A sign in a j-signature: `Minus` marks a removable node, `Plus` an
/// addable one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

/// One entry of a j-signature: the abacus position and its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignatureEntry {
    pub position: usize,
    pub sign: Sign,
}

/// An abacus display with `e` runners and a fixed number of beads.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Abacus {
    e: usize,
    beads: usize,
    occupied: Vec<bool>,
}

impl Abacus {
    /// Places a bead at `λ_i + r - i` for `1 ≤ i ≤ r`.
    pub fn from_partition(lambda: &Partition, e: usize, r: usize) -> Result<Self> {
        check_e(e)?;
        if r < lambda.len() {
            return Err(Error::TooFewBeads { beads: r, parts: lambda.len() });
        }
        let top = if r == 0 { 0 } else { lambda.part(0) + r };
        let mut occupied = vec![false; top];
        for i in 0..r {
            occupied[lambda.part(i) + r - 1 - i] = true;
        }
        Ok(Abacus { e, beads: r, occupied })
    }

    /// Builds a display from an explicit set of bead positions.
    pub fn from_positions(e: usize, positions: &[usize]) -> Result<Self> {
        check_e(e)?;
        let top = positions.iter().max().map_or(0, |m| m + 1);
        let mut occupied = vec![false; top];
        for &p in positions {
            if occupied[p] {
                return Err(Error::MalformedText(format!("bead position {p} repeated")));
            }
            occupied[p] = true;
        }
        Ok(Abacus { e, beads: positions.len(), occupied })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// Number of beads r.
    pub fn beads(&self) -> usize {
        self.beads
    }

    pub fn is_occupied(&self, p: usize) -> bool {
        self.occupied.get(p).copied().unwrap_or(false)
    }

    /// The preceding position is occupied; position 0 counts as preceded by a bead.
    fn pred_occupied(&self, p: usize) -> bool {
        p == 0 || self.is_occupied(p - 1)
    }

    /// One past the highest occupied position.
    pub fn extent(&self) -> usize {
        self.occupied.len()
    }

    /// Occupied positions in decreasing order (β_1 > β_2 > …).
    pub fn beta(&self) -> Vec<usize> {
        (0..self.occupied.len()).rev().filter(|&p| self.occupied[p]).collect()
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.beads;
        let parts = self.beta().into_iter().enumerate().map(|(i, b)| b + 1 + i - r).collect();
        Partition::from_sorted(parts)
    }

    pub fn residue_of_position(&self, p: usize) -> usize {
        (p + self.e - self.beads % self.e) % self.e
    }

    pub fn runner_of_residue(&self, j: usize) -> usize {
        (j + self.beads) % self.e
    }

    pub fn residue_of_runner(&self, i: usize) -> usize {
        self.residue_of_position(i)
    }

    /// Bead counts on each runner.
    pub fn bead_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.e];
        for p in self.positions() {
            counts[p % self.e] += 1;
        }
        counts
    }

    fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.occupied.len()).filter(move |&p| self.occupied[p])
    }

    /// Number of vacant positions above the bead at `p` on its runner.
    pub fn bead_weight(&self, p: usize) -> usize {
        (0..p / self.e).filter(|&row| !self.is_occupied(row * self.e + p % self.e)).count()
    }

    /// The e-weight: total of all bead weights.
    pub fn weight(&self) -> usize {
        self.positions().map(|p| self.bead_weight(p)).sum()
    }

    /// The display with every bead slid as high as possible on its runner.
    pub fn core(&self) -> Abacus {
        let counts = self.bead_counts();
        let mut positions = Vec::with_capacity(self.beads);
        for (i, &c) in counts.iter().enumerate() {
            positions.extend((0..c).map(|row| row * self.e + i));
        }
        Abacus::from_positions(self.e, &positions).expect("distinct positions")
    }

    /// Moves one bead; the caller guarantees `from` is occupied and `to` vacant.
    pub(crate) fn moved(&self, from: usize, to: usize) -> Abacus {
        debug_assert!(self.is_occupied(from) && !self.is_occupied(to));
        let mut occupied = self.occupied.clone();
        if to >= occupied.len() {
            occupied.resize(to + 1, false);
        }
        occupied[from] = false;
        occupied[to] = true;
        while occupied.last() == Some(&false) {
            occupied.pop();
        }
        Abacus { e: self.e, beads: self.beads, occupied }
    }

    /// Number of occupied positions strictly between `lo` and `hi`.
    pub fn occupied_between(&self, lo: usize, hi: usize) -> usize {
        (lo + 1..hi).filter(|&p| self.is_occupied(p)).count()
    }

    /// Removes e-hooks until a core is reached, choosing each time among the
    /// movable beads with `choose`, and returns the total leg length.
    pub fn total_leg_length(&self, mut choose: impl FnMut(&[usize]) -> usize) -> usize {
        let mut current = self.clone();
        let mut legs = 0;
        loop {
            let movable: Vec<usize> = current
                .positions()
                .filter(|&p| p >= self.e && !current.is_occupied(p - self.e))
                .collect();
            if movable.is_empty() {
                return legs;
            }
            let p = movable[choose(&movable) % movable.len()];
            legs += current.occupied_between(p - self.e, p);
            current = current.moved(p, p - self.e);
        }
    }

    /// σ_e as ±1.
    pub fn relative_sign(&self) -> i8 {
        if self.total_leg_length(|_| 0) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The e-quotient together with the runner bead counts.
    pub fn quotient(&self) -> RunnerNotation {
        let counts = self.bead_counts();
        let quotient = (0..self.e)
            .map(|i| {
                let rows: Vec<usize> =
                    self.positions().filter(|p| p % self.e == i).map(|p| p / self.e).collect();
                let b = rows.len();
                let parts = rows.iter().rev().enumerate().map(|(k, &row)| row + k + 1 - b).collect();
                Partition::from_sorted(parts)
            })
            .collect();
        RunnerNotation { quotient, counts }
    }

    /// Occupied positions of residue `j` whose preceding position is vacant.
    pub fn removable(&self, j: usize) -> Vec<usize> {
        self.runner_positions(j)
            .filter(|&p| self.is_occupied(p) && !self.pred_occupied(p))
            .collect()
    }

    /// Vacant positions of residue `j` whose preceding position is occupied.
    pub fn addable(&self, j: usize) -> Vec<usize> {
        self.runner_positions(j)
            .filter(|&p| !self.is_occupied(p) && self.pred_occupied(p))
            .collect()
    }

    fn runner_positions(&self, j: usize) -> impl Iterator<Item = usize> {
        let i = self.runner_of_residue(j % self.e);
        let e = self.e;
        (i..self.occupied.len() + e).step_by(e)
    }

    /// The j-signature read from the top of the runner downwards.
    pub fn signature(&self, j: usize) -> Vec<SignatureEntry> {
        self.runner_positions(j)
            .filter_map(|p| match (self.is_occupied(p), self.pred_occupied(p)) {
                (true, false) => Some(SignatureEntry { position: p, sign: Sign::Minus }),
                (false, true) => Some(SignatureEntry { position: p, sign: Sign::Plus }),
                _ => None,
            })
            .collect()
    }

    /// The signature after deleting adjacent `−+` pairs to a fixed point;
    /// the result reads `+…+−…−`.
    pub fn reduced_signature(&self, j: usize) -> Vec<SignatureEntry> {
        let mut stack: Vec<SignatureEntry> = Vec::new();
        for entry in self.signature(j) {
            match (stack.last(), entry.sign) {
                (Some(top), Sign::Plus) if top.sign == Sign::Minus => {
                    stack.pop();
                }
                _ => stack.push(entry),
            }
        }
        stack
    }

    /// Positions of normal beads in increasing order (highest first).
    pub fn normal(&self, j: usize) -> Vec<usize> {
        self.reduced_signature(j)
            .into_iter()
            .filter(|s| s.sign == Sign::Minus)
            .map(|s| s.position)
            .collect()
    }

    /// Positions of conormal gaps in increasing order (lowest last).
    pub fn conormal(&self, j: usize) -> Vec<usize> {
        self.reduced_signature(j)
            .into_iter()
            .filter(|s| s.sign == Sign::Plus)
            .map(|s| s.position)
            .collect()
    }

    pub fn epsilon(&self, j: usize) -> usize {
        self.normal(j).len()
    }

    pub fn phi(&self, j: usize) -> usize {
        self.conormal(j).len()
    }

    /// Ẽ_j^t: moves the `t` highest normal beads back one position.
    pub fn remove_normal(&self, j: usize, t: usize) -> Result<Abacus> {
        let normal = self.normal(j);
        if normal.len() < t {
            return Err(Error::NotEnoughNormalNodes {
                residue: j % self.e,
                available: normal.len(),
                wanted: t,
            });
        }
        Ok(normal[..t].iter().fold(self.clone(), |a, &p| a.moved(p, p - 1)))
    }

    /// F̃_j^t: fills the `t` lowest conormal gaps from the preceding position.
    ///
    /// The display must have a bead at position 0 whenever position 0 is
    /// one of the chosen gaps; [`add_conormal`] arranges this.
    pub fn add_conormal(&self, j: usize, t: usize) -> Result<Abacus> {
        let conormal = self.conormal(j);
        if conormal.len() < t {
            return Err(Error::NotEnoughConormalNodes {
                residue: j % self.e,
                available: conormal.len(),
                wanted: t,
            });
        }
        let chosen = &conormal[conormal.len() - t..];
        if chosen.contains(&0) {
            return Err(Error::PreconditionViolated(
                "adding a node below the last bead needs more beads".into(),
            ));
        }
        Ok(chosen.iter().rev().fold(self.clone(), |a, &p| a.moved(p - 1, p)))
    }

    /// Rows of `b` (bead) and `-` (gap), top row first; for debugging.
    pub fn to_text(&self) -> String {
        let rows = self.occupied.len().div_ceil(self.e).max(1);
        let mut out = String::new();
        for row in 0..rows {
            for i in 0..self.e {
                out.push(if self.is_occupied(row * self.e + i) { 'b' } else { '-' });
            }
            out.push('\n');
        }
        out
    }

    /// Inserts a new runner at index `slot` (0 ≤ slot ≤ e); position
    /// `R·e + c` moves to `R·(e+1) + c'` where `c'` skips the new runner.
    /// The new runner is empty, or full (every row up to the last row of
    /// the display holds a bead, plus `extra_rows` more).
    pub fn insert_runner(&self, slot: usize, kind: RunnerKind) -> Result<Abacus> {
        if slot > self.e {
            return Err(Error::PreconditionViolated(format!("slot {slot} > e = {}", self.e)));
        }
        let e1 = self.e + 1;
        let map = |p: usize| {
            let (row, c) = (p / self.e, p % self.e);
            row * e1 + if c >= slot { c + 1 } else { c }
        };
        let mut positions: Vec<usize> = self.positions().map(map).collect();
        if let RunnerKind::Full = kind {
            let rows = self.occupied.len().div_ceil(self.e) + 1;
            positions.extend((0..rows).map(|row| row * e1 + slot));
        }
        Abacus::from_positions(e1, &positions)
    }

    /// Deletes runner `i` when it is empty-eligible (its last bead precedes
    /// every gap) or full-eligible (its first gap follows every bead).
    pub fn delete_runner(&self, i: usize) -> Result<Abacus> {
        if i >= self.e || self.e < 3 {
            return Err(Error::PreconditionViolated(format!("cannot delete runner {i}")));
        }
        if !(self.runner_empty_eligible(i) || self.runner_full_eligible(i)) {
            return Err(Error::PreconditionViolated(format!("runner {i} is neither empty nor full")));
        }
        let e0 = self.e - 1;
        let positions: Vec<usize> = self
            .positions()
            .filter(|p| p % self.e != i)
            .map(|p| {
                let (row, c) = (p / self.e, p % self.e);
                row * e0 + if c > i { c - 1 } else { c }
            })
            .collect();
        Abacus::from_positions(e0, &positions)
    }

    /// Every bead on runner `i` precedes every gap of the display.
    pub fn runner_empty_eligible(&self, i: usize) -> bool {
        let last_bead = self.positions().filter(|p| p % self.e == i).max();
        let first_gap = (0..).find(|&p| !self.is_occupied(p)).unwrap_or(0);
        last_bead.is_none_or(|b| b < first_gap)
    }

    /// The first gap on runner `i` follows every bead of the display.
    pub fn runner_full_eligible(&self, i: usize) -> bool {
        let first_gap = (0..).map(|row| row * self.e + i).find(|&p| !self.is_occupied(p)).unwrap();
        self.positions().all(|p| p < first_gap)
    }
}

/// Shape of an inserted runner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunnerKind {
    Empty,
    Full,
}

/// A display of λ with enough beads that position 0 is occupied.
pub(crate) fn working_abacus(lambda: &Partition, e: usize) -> Result<Abacus> {
    Abacus::from_partition(lambda, e, lambda.len() + 1)
}

/// The e-core of λ.
pub fn e_core(lambda: &Partition, e: usize) -> Result<Partition> {
    Ok(working_abacus(lambda, e)?.core().to_partition())
}

/// The e-weight of λ.
pub fn e_weight(lambda: &Partition, e: usize) -> Result<usize> {
    Ok(working_abacus(lambda, e)?.weight())
}

/// σ_e(λ) as ±1.
pub fn relative_e_sign(lambda: &Partition, e: usize) -> Result<i8> {
    Ok(working_abacus(lambda, e)?.relative_sign())
}

/// The e-quotient of λ on a display with `r` beads.
pub fn e_quotient(lambda: &Partition, e: usize, r: usize) -> Result<RunnerNotation> {
    Ok(Abacus::from_partition(lambda, e, r)?.quotient())
}

/// Removable nodes of residue `j` as abacus positions on a display with `r` beads.
pub fn removable_nodes(lambda: &Partition, e: usize, r: usize, j: usize) -> Result<Vec<usize>> {
    Ok(Abacus::from_partition(lambda, e, r)?.removable(j))
}

/// ε_j(λ): number of j-normal nodes.
pub fn epsilon(lambda: &Partition, e: usize, j: usize) -> Result<usize> {
    Ok(working_abacus(lambda, e)?.epsilon(j))
}

/// φ_j(λ): number of j-conormal nodes.
pub fn phi(lambda: &Partition, e: usize, j: usize) -> Result<usize> {
    Ok(working_abacus(lambda, e)?.phi(j))
}

/// Ẽ_j^t λ.
pub fn remove_normal(lambda: &Partition, e: usize, j: usize, t: usize) -> Result<Partition> {
    Ok(working_abacus(lambda, e)?.remove_normal(j, t)?.to_partition())
}

/// F̃_j^t λ.
pub fn add_conormal(lambda: &Partition, e: usize, j: usize, t: usize) -> Result<Partition> {
    Ok(working_abacus(lambda, e)?.add_conormal(j, t)?.to_partition())
}

/// Inserts a runner into the display of λ with `r` beads.
pub fn insert_runner(
    lambda: &Partition,
    e: usize,
    r: usize,
    kind: RunnerKind,
    slot: usize,
) -> Result<Partition> {
    Ok(Abacus::from_partition(lambda, e, r)?.insert_runner(slot, kind)?.to_partition())
}

/// Deletes runner `i` from the display of λ with `r` beads.
pub fn delete_runner(lambda: &Partition, e: usize, r: usize, i: usize) -> Result<Partition> {
    Ok(Abacus::from_partition(lambda, e, r)?.delete_runner(i)?.to_partition())
}
