//! Integer partitions: parsing, dominance, regularity and the row/column
//! removal maps.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition stored as its weakly decreasing positive parts.
///
/// `Ord` is lexicographic on the parts, so sorting in reverse gives the
/// descending lexicographic order used for every table in this crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting increasing steps. Trailing zeros are
    /// dropped; a zero followed by a positive part is an order violation.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(join(&parts)));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, l(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True iff no `e` consecutive nonzero parts are equal.
    pub fn is_e_regular(&self, e: usize) -> Result<bool> {
        check_e(e)?;
        let mut run = 0;
        let mut prev = 0;
        for &p in &self.parts {
            run = if p == prev { run + 1 } else { 1 };
            prev = p;
            if run >= e {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dominance: `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        let (n, m) = (self.size(), other.size());
        if n != m {
            return Err(Error::SizeMismatch(n, m));
        }
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// R(ν): drop the first row.
    pub fn row_removal(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(Partition { parts: self.parts[1..].to_vec() })
    }

    /// C(ν): drop the first column.
    pub fn column_removal(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(Partition::from_sorted(self.parts.iter().map(|p| p - 1).collect()))
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let mut out = Vec::with_capacity(first);
        for c in 0..first {
            out.push(self.parts.iter().take_while(|&&p| p > c).count());
        }
        Partition { parts: out }
    }

    /// Residue `(col - row) mod e` of the node in 0-based row `row` and column `col`.
    pub fn node_residue(row: usize, col: usize, e: usize) -> usize {
        (col + e * (row / e + 1) - row) % e
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<usize>() {
                    Ok(0) | Err(_) => Err(Error::MalformedText(tok.to_string())),
                    Ok(v) => Ok(v),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Parses the comma-separated text form; the empty string is ∅.
pub fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}

pub(crate) fn check_e(e: usize) -> Result<()> {
    if e < 2 {
        Err(Error::BadE(e))
    } else {
        Ok(())
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        current.push(p);
        fill(rest - p, p, current, out);
        current.pop();
    }
}

/// Regularity read off the ladders: λ is e-regular iff for every node (r, c)
/// with r ≥ e - 1, the slot one step up its ladder, (r - (e - 1), c + 1), is
/// also a node of λ.
///
/// Independent of [`Partition::is_e_regular`] and used to cross-check it.
pub fn is_e_regular_by_ladders(lambda: &Partition, e: usize) -> Result<bool> {
    check_e(e)?;
    for (r, &len) in lambda.parts.iter().enumerate() {
        for c in 0..len {
            if r + 1 >= e {
                let up = r + 1 - e; // row r - (e-1)
                if lambda.part(up) <= c + 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
