//! Runner notation `<0_{1^2},2_{1^2}|2^5>` and block labels `<4^2,6,9^3>`.
//!
//! Grammar:
//!
//! ```text
//! notation := "<" entries "|" counts ">"
//! entries  := entry ("," entry)* | ""
//! entry    := INT [ "_" ( "{" items "}" | INT ) ]
//! items    := item ("," item)*        item := INT [ "^" INT ]
//! counts   := count ("," count)*      count := INT [ "^" INT ]
//! ```
//!
//! A bare runner index `i` stands for `i_{1}`. Unicode angle brackets
//! `⟨ ⟩` are accepted in place of `< >`.

use std::fmt;
use std::str::FromStr;

use crate::abacus::Abacus;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// An e-quotient together with the bead count of each runner.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunnerNotation {
    pub quotient: Vec<Partition>,
    pub counts: Vec<usize>,
}

impl RunnerNotation {
    pub fn e(&self) -> usize {
        self.counts.len()
    }

    /// Total bead count r.
    pub fn beads(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Rebuilds the display: runner `i` carries `b_i` beads at rows
    /// `λ(i)_k + b_i - k`.
    pub fn to_abacus(&self) -> Result<Abacus> {
        let e = self.e();
        let mut positions = Vec::with_capacity(self.beads());
        for (i, (q, &b)) in self.quotient.iter().zip(&self.counts).enumerate() {
            if q.len() > b {
                return Err(Error::TooFewBeads { beads: b, parts: q.len() });
            }
            positions.extend((0..b).map(|k| (q.part(k) + b - 1 - k) * e + i));
        }
        Abacus::from_positions(e, &positions)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Ok(self.to_abacus()?.to_partition())
    }

    /// Parses the entries of a notation and takes the counts from elsewhere,
    /// e.g. `<0,2_{3}>` against the counts `[4, 4, 6]`.
    pub fn with_counts(entries: &str, counts: &[usize]) -> Result<Self> {
        let body = strip_brackets(entries)?;
        let body = body.split('|').next().unwrap_or("");
        let quotient = parse_entries(body, counts.len())?;
        Ok(RunnerNotation { quotient, counts: counts.to_vec() })
    }
}

impl fmt::Display for RunnerNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .quotient
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_empty())
            .map(|(i, q)| {
                if q.parts() == [1] {
                    i.to_string()
                } else {
                    format!("{i}_{{{}}}", run_length(q.parts()))
                }
            })
            .collect();
        write!(f, "<{}|{}>", entries.join(","), run_length(&self.counts))
    }
}

impl FromStr for RunnerNotation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = strip_brackets(s)?;
        let (entries, counts) = body
            .split_once('|')
            .ok_or_else(|| Error::MalformedText(format!("missing bead counts in {s}")))?;
        let counts = parse_runs(counts)?;
        if counts.len() < 2 {
            return Err(Error::BadE(counts.len()));
        }
        let quotient = parse_entries(entries, counts.len())?;
        Ok(RunnerNotation { quotient, counts })
    }
}

/// Parses a block label `<b_0,…,b_{e-1}>` into its bead counts.
pub fn parse_block_label(s: &str) -> Result<Vec<usize>> {
    let body = strip_brackets(s)?;
    let counts = parse_runs(body)?;
    if counts.len() < 2 {
        return Err(Error::BadE(counts.len()));
    }
    Ok(counts)
}

/// Formats bead counts as a block label with run-length compression.
pub fn format_block_label(counts: &[usize]) -> String {
    format!("<{}>", run_length(counts))
}

/// Reads an abacus drawn as rows of `b` (bead) and `n` (no bead), e.g.
/// `bbhbb,bbhbn,nnhnn`. A single `h` column stands for the runners elided
/// between its neighbours: columns left of it are runners `0, 1, …`, columns
/// right of it are the last runners, and each elided runner copies the column
/// just left of `h`. When e is too small for every drawn column, columns that
/// land on the same runner must agree.
pub fn parse_abacus_rows(rows: &str, e: usize) -> Result<Abacus> {
    let bad = |msg: &str| Error::MalformedText(format!("{msg} in abacus {rows}"));
    let rows: Vec<&str> = rows.split(',').map(str::trim).collect();
    let width = rows.first().map_or(0, |r| r.len());
    if width == 0 || rows.iter().any(|r| r.len() != width) {
        return Err(bad("ragged rows"));
    }
    let cols: Vec<Vec<u8>> = (0..width).map(|c| rows.iter().map(|r| r.as_bytes()[c]).collect()).collect();
    let hidden: Vec<usize> = (0..width).filter(|&c| cols[c].iter().all(|&x| x == b'h')).collect();
    // runners[i] is the drawn column shown for runner i.
    let mut runners: Vec<Option<usize>> = vec![None; e];
    let mut place = |runner: usize, c: usize| -> Result<()> {
        match runners[runner] {
            Some(prev) if cols[prev] != cols[c] => Err(bad("conflicting columns")),
            _ => {
                runners[runner] = Some(c);
                Ok(())
            }
        }
    };
    match hidden.as_slice() {
        [] if width == e => {
            for c in 0..width {
                place(c, c)?;
            }
        }
        [h] => {
            let right = width - h - 1;
            if *h == 0 || *h > e || right > e {
                return Err(bad("too many columns"));
            }
            for c in 0..*h {
                place(c, c)?;
            }
            for k in 0..right {
                place(e - right + k, h + 1 + k)?;
            }
            let fill = h - 1;
            for slot in runners.iter_mut().filter(|x| x.is_none()) {
                *slot = Some(fill);
            }
        }
        _ => return Err(bad("column count does not match e")),
    }
    let mut positions = Vec::new();
    for (i, col) in runners.iter().enumerate() {
        for (row, &x) in cols[col.expect("every runner placed")].iter().enumerate() {
            match x {
                b'b' => positions.push(row * e + i),
                b'n' => {}
                _ => return Err(bad("unexpected symbol")),
            }
        }
    }
    Abacus::from_positions(e, &positions)
}

fn strip_brackets(s: &str) -> Result<&str> {
    let t = s.trim();
    let t = t
        .strip_prefix('<')
        .or_else(|| t.strip_prefix('⟨'))
        .ok_or_else(|| Error::MalformedText(format!("expected '<' in {s}")))?;
    t.strip_suffix('>')
        .or_else(|| t.strip_suffix('⟩'))
        .ok_or_else(|| Error::MalformedText(format!("expected '>' in {s}")))
}

fn parse_int(tok: &str) -> Result<usize> {
    tok.trim().parse().map_err(|_| Error::MalformedText(tok.trim().to_string()))
}

/// `4^3,5` → [4,4,4,5].
fn parse_runs(s: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for item in s.split(',') {
        match item.split_once('^') {
            Some((v, k)) => {
                let v = parse_int(v)?;
                out.extend(std::iter::repeat_n(v, parse_int(k)?));
            }
            None => out.push(parse_int(item)?),
        }
    }
    Ok(out)
}

fn parse_entries(s: &str, e: usize) -> Result<Vec<Partition>> {
    let mut quotient = vec![Partition::empty(); e];
    let mut seen = vec![false; e];
    for entry in split_top_level(s) {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        let (runner, shape) = match entry.split_once('_') {
            None => (parse_int(entry)?, Partition::new(vec![1])?),
            Some((i, rest)) => {
                let rest = rest.trim();
                let inner = rest
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .unwrap_or(rest);
                let parts = parse_runs(inner)?;
                if parts.contains(&0) {
                    return Err(Error::MalformedText(entry.to_string()));
                }
                (parse_int(i)?, Partition::new(parts)?)
            }
        };
        if runner >= e {
            return Err(Error::MalformedText(format!("runner {runner} out of range in {entry}")));
        }
        if seen[runner] {
            return Err(Error::MalformedText(format!("runner {runner} given twice")));
        }
        seen[runner] = true;
        quotient[runner] = shape;
    }
    Ok(quotient)
}

/// Splits on commas outside braces.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, ch) in s.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn run_length(values: &[usize]) -> String {
    let mut items = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let mut j = i;
        while j < values.len() && values[j] == values[i] {
            j += 1;
        }
        if j - i > 1 {
            items.push(format!("{}^{}", values[i], j - i));
        } else {
            items.push(values[i].to_string());
        }
        i = j;
    }
    items.join(",")
}
