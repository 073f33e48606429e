//! Golden data transcribed from the appendix tables, with the tables' free
//! parameters written as `[expr]` and instantiated per run.
//!
//! Two layouts share one line-oriented format. Jantzen tables
//! (`41-*`) have `column` and `row` lines; pair tables (`3e`, `4e`) have
//! `case`, `lambda`, `nil` and `claim` lines. `for i = FROM down TO … end`
//! repeats rows for `i = FROM, FROM-1, …, TO` (empty when FROM < TO).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::expr::{eval, substitute, ExprError};

pub const TABLE_3E: &str = include_str!("../golden/table_3e.txt");
pub const TABLE_4E: &str = include_str!("../golden/table_4e.txt");
pub const TABLE_41_1: &str = include_str!("../golden/table_41_1.txt");
pub const TABLE_41_2: &str = include_str!("../golden/table_41_2.txt");
pub const TABLE_41_3: &str = include_str!("../golden/table_41_3.txt");
pub const TABLE_41_6: &str = include_str!("../golden/table_41_6.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldenError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("parameters {0:?} violate the table's constraint")]
    Constraint(BTreeMap<String, i64>),
}

pub type Params = BTreeMap<String, i64>;

/// A printed cell: blank, or an integer expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Blank,
    Expr(String),
}

impl Cell {
    fn parse(tok: &str) -> Cell {
        match tok {
            "." => Cell::Blank,
            t => Cell::Expr(t.trim_start_matches('[').trim_end_matches(']').to_string()),
        }
    }

    fn value(&self, vars: &Params) -> Result<Option<i64>, GoldenError> {
        match self {
            Cell::Blank => Ok(None),
            Cell::Expr(x) => Ok(Some(eval(x, vars)?)),
        }
    }
}

#[derive(Clone, Debug)]
struct RowTemplate {
    label: String,
    cells: Vec<Cell>,
    bound: Cell,
    dec: Cell,
}

#[derive(Clone, Debug)]
enum RowItem {
    Row(RowTemplate),
    For { var: String, from: String, to: String, body: Vec<RowTemplate> },
}

/// Header lines common to both layouts.
#[derive(Clone, Debug, Default)]
pub struct Header {
    pub name: String,
    pub require: Option<String>,
    pub instances: Vec<Params>,
    block: String,
    pub weight: usize,
}

impl Header {
    fn check(&self, vars: &Params) -> Result<(), GoldenError> {
        match &self.require {
            Some(cond) if eval(cond, vars)? == 0 => Err(GoldenError::Constraint(vars.clone())),
            _ => Ok(()),
        }
    }

    /// The block's runner bead counts in run-length form.
    pub fn block_counts(&self, vars: &Params) -> Result<String, GoldenError> {
        Ok(substitute(&self.block, vars)?)
    }
}

/// A Jantzen table: J(ν, column), B(ν, μ̂) and [W^ν : L^μ̂].
#[derive(Clone, Debug)]
pub struct JantzenTable {
    pub header: Header,
    mu: String,
    columns: Vec<String>,
    rows: Vec<RowItem>,
}

/// One instantiated row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JantzenRow {
    pub label: String,
    pub cells: Vec<Option<i64>>,
    pub bound: Option<i64>,
    pub dec: Option<i64>,
}

/// A Jantzen table at fixed parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JantzenInstance {
    pub counts: String,
    pub weight: usize,
    pub mu: String,
    pub columns: Vec<String>,
    pub rows: Vec<JantzenRow>,
}

impl JantzenTable {
    pub fn instantiate(&self, vars: &Params) -> Result<JantzenInstance, GoldenError> {
        self.header.check(vars)?;
        let row = |t: &RowTemplate, vars: &Params| -> Result<JantzenRow, GoldenError> {
            Ok(JantzenRow {
                label: substitute(&t.label, vars)?,
                cells: t.cells.iter().map(|c| c.value(vars)).collect::<Result<_, _>>()?,
                bound: t.bound.value(vars)?,
                dec: t.dec.value(vars)?,
            })
        };
        let mut rows = Vec::new();
        for item in &self.rows {
            match item {
                RowItem::Row(t) => rows.push(row(t, vars)?),
                RowItem::For { var, from, to, body } => {
                    let (from, to) = (eval(from, vars)?, eval(to, vars)?);
                    let mut inner = vars.clone();
                    for i in (to..=from).rev() {
                        inner.insert(var.clone(), i);
                        for t in body {
                            rows.push(row(t, &inner)?);
                        }
                    }
                }
            }
        }
        Ok(JantzenInstance {
            counts: self.header.block_counts(vars)?,
            weight: self.header.weight,
            mu: substitute(&self.mu, vars)?,
            columns: self.columns.iter().map(|c| substitute(c, vars)).collect::<Result<_, _>>()?,
            rows,
        })
    }
}

/// A μ together with its listed λ and any printed d-values.
#[derive(Clone, Debug)]
struct CaseTemplate {
    mu: String,
    when: Option<String>,
    lambdas: Vec<(String, Option<String>)>,
}

#[derive(Clone, Debug)]
struct ClaimTemplate {
    from: String,
    from_counts: String,
    to: String,
    to_counts: String,
    when: Option<String>,
}

/// A pair table listing (λ, μ) with optional d-values, plus semisimple
/// induction claims.
#[derive(Clone, Debug)]
pub struct PairTable {
    pub header: Header,
    cases: Vec<CaseTemplate>,
    claims: Vec<ClaimTemplate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCase {
    pub mu: String,
    /// Listed λ with the printed d-value text, if any.
    pub lambdas: Vec<(String, Option<String>)>,
}

/// `from` (read against `from_counts`) induces semisimply to `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub from: String,
    pub from_counts: String,
    pub to: String,
    pub to_counts: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInstance {
    pub counts: String,
    pub weight: usize,
    pub cases: Vec<PairCase>,
    pub claims: Vec<Claim>,
}

fn applies(when: &Option<String>, vars: &Params) -> Result<bool, GoldenError> {
    Ok(match when {
        Some(cond) => eval(cond, vars)? != 0,
        None => true,
    })
}

/// Expands `ramp(start,step)` to `start, start+step, …` with e terms.
fn counts_text(text: &str, vars: &Params) -> Result<String, GoldenError> {
    let text = substitute(text, vars)?;
    let Some(args) = text.strip_prefix("ramp(").and_then(|t| t.strip_suffix(')')) else {
        return Ok(text);
    };
    let (start, step) = args.split_once(',').ok_or(ExprError::UnexpectedEnd(text.clone()))?;
    let (start, step) = (eval(start, vars)?, eval(step, vars)?);
    let e = *vars.get("e").ok_or(ExprError::UnknownVariable("e".into()))?;
    Ok((0..e).map(|k| (start + step * k).to_string()).collect::<Vec<_>>().join(","))
}

impl PairTable {
    pub fn instantiate(&self, vars: &Params) -> Result<PairInstance, GoldenError> {
        self.header.check(vars)?;
        let mut cases = Vec::new();
        for case in &self.cases {
            if !applies(&case.when, vars)? {
                continue;
            }
            let lambdas = case
                .lambdas
                .iter()
                .map(|(l, d)| Ok((substitute(l, vars)?, d.clone())))
                .collect::<Result<_, GoldenError>>()?;
            cases.push(PairCase { mu: substitute(&case.mu, vars)?, lambdas });
        }
        let mut claims = Vec::new();
        for c in &self.claims {
            if !applies(&c.when, vars)? {
                continue;
            }
            claims.push(Claim {
                from: substitute(&c.from, vars)?,
                from_counts: counts_text(&c.from_counts, vars)?,
                to: substitute(&c.to, vars)?,
                to_counts: counts_text(&c.to_counts, vars)?,
            });
        }
        Ok(PairInstance { counts: self.header.block_counts(vars)?, weight: self.header.weight, cases, claims })
    }
}

/// Splits `text when cond` into its parts.
fn split_when(text: &str) -> (String, Option<String>) {
    match text.split_once(" when ") {
        Some((t, c)) => (t.trim().to_string(), Some(c.trim().to_string())),
        None => (text.trim().to_string(), None),
    }
}

fn parse_instance(rest: &str, line: usize) -> Result<Params, GoldenError> {
    let mut p = Params::new();
    for item in rest.split_whitespace() {
        let (k, v) = item.split_once('=').ok_or(GoldenError::Syntax { line, msg: format!("bad binding {item}") })?;
        let v = v.parse().map_err(|_| GoldenError::Syntax { line, msg: format!("bad value {v}") })?;
        p.insert(k.to_string(), v);
    }
    Ok(p)
}

fn parse_row(rest: &str, line: usize) -> Result<RowTemplate, GoldenError> {
    let parts: Vec<&str> = rest.split(" : ").collect();
    let [label, cells, bound, dec] = parts.as_slice() else {
        return Err(GoldenError::Syntax { line, msg: "row needs 'label : cells : B : W'".into() });
    };
    Ok(RowTemplate {
        label: label.trim().to_string(),
        cells: cells.split_whitespace().map(Cell::parse).collect(),
        bound: Cell::parse(bound.trim()),
        dec: Cell::parse(dec.trim()),
    })
}

/// Either layout, as read from a file.
#[derive(Clone, Debug)]
pub enum Golden {
    Jantzen(JantzenTable),
    Pairs(PairTable),
}

impl Golden {
    pub fn header(&self) -> &Header {
        match self {
            Golden::Jantzen(t) => &t.header,
            Golden::Pairs(t) => &t.header,
        }
    }
}

pub fn parse(text: &str) -> Result<Golden, GoldenError> {
    let mut header = Header::default();
    let (mut mu, mut columns, mut rows) = (None, Vec::new(), Vec::new());
    let (mut cases, mut claims): (Vec<CaseTemplate>, Vec<ClaimTemplate>) = (Vec::new(), Vec::new());
    let mut open_loop: Option<(String, String, String, Vec<RowTemplate>)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let syntax = |msg: &str| GoldenError::Syntax { line, msg: msg.to_string() };
        let (key, rest) = t.split_once(' ').unwrap_or((t, ""));
        let rest = rest.trim();
        match key {
            "table" => header.name = rest.to_string(),
            "require" => header.require = Some(rest.to_string()),
            "instance" => header.instances.push(parse_instance(rest, line)?),
            "block" => header.block = rest.to_string(),
            "weight" => header.weight = rest.parse().map_err(|_| syntax("bad weight"))?,
            "mu" => mu = Some(rest.to_string()),
            "column" => columns.push(rest.to_string()),
            "row" => {
                let row = parse_row(rest, line)?;
                match open_loop.as_mut() {
                    Some((_, _, _, body)) => body.push(row),
                    None => rows.push(RowItem::Row(row)),
                }
            }
            "for" => {
                // for i = FROM down TO
                let (var, range) = rest.split_once('=').ok_or_else(|| syntax("for needs '='"))?;
                let (from, to) = range.split_once(" down ").ok_or_else(|| syntax("for needs 'down'"))?;
                if open_loop.is_some() {
                    return Err(syntax("nested for"));
                }
                open_loop = Some((var.trim().to_string(), from.trim().to_string(), to.trim().to_string(), Vec::new()));
            }
            "end" => {
                let (var, from, to, body) = open_loop.take().ok_or_else(|| syntax("end without for"))?;
                rows.push(RowItem::For { var, from, to, body });
            }
            "case" => {
                let (mu, when) = split_when(rest);
                cases.push(CaseTemplate { mu, when, lambdas: Vec::new() });
            }
            "nil" => {
                cases.last().ok_or_else(|| syntax("nil outside a case"))?;
            }
            "lambda" => {
                let case = cases.last_mut().ok_or_else(|| syntax("lambda outside a case"))?;
                let entry = match rest.split_once(" = ") {
                    Some((l, d)) => (l.trim().to_string(), Some(d.trim().to_string())),
                    None => (rest.to_string(), None),
                };
                case.lambdas.push(entry);
            }
            "claim" => {
                let (body, when) = split_when(rest);
                let (lhs, rhs) = body.split_once(" ~ ").ok_or_else(|| syntax("claim needs '~'"))?;
                let (from, from_counts) = lhs.split_once(" @ ").ok_or_else(|| syntax("claim needs '@'"))?;
                let (to, to_counts) = rhs.split_once(" @ ").ok_or_else(|| syntax("claim needs '@'"))?;
                claims.push(ClaimTemplate {
                    from: from.trim().into(),
                    from_counts: from_counts.trim().into(),
                    to: to.trim().into(),
                    to_counts: to_counts.trim().into(),
                    when,
                });
            }
            _ => return Err(syntax(&format!("unknown directive {key}"))),
        }
    }
    if open_loop.is_some() {
        return Err(GoldenError::Syntax { line: text.lines().count(), msg: "unterminated for".into() });
    }
    match mu {
        Some(mu) => Ok(Golden::Jantzen(JantzenTable { header, mu, columns, rows })),
        None => Ok(Golden::Pairs(PairTable { header, cases, claims })),
    }
}

/// Every bundled table, keyed by its target name.
pub fn bundled() -> Vec<(&'static str, &'static str)> {
    vec![
        ("3e", TABLE_3E),
        ("4e", TABLE_4E),
        ("41-1", TABLE_41_1),
        ("41-2", TABLE_41_2),
        ("41-3", TABLE_41_3),
        ("41-6", TABLE_41_6),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(pairs: &[(&str, i64)]) -> Params {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn bundled_tables_parse_and_name_themselves() {
        for (name, text) in bundled() {
            let g = parse(text).unwrap();
            assert_eq!(g.header().name, name);
            assert!(!g.header().instances.is_empty());
        }
    }

    #[test]
    fn table_41_3_has_seventeen_rows() {
        let Golden::Jantzen(t) = parse(TABLE_41_3).unwrap() else { panic!() };
        let inst = t.instantiate(&params(&[("a", 2), ("e", 3)])).unwrap();
        assert_eq!(inst.rows.len(), 17);
        assert_eq!(inst.counts, "4^2,6,9^0");
        let shaded = inst.rows.iter().find(|r| r.label == "<1_{2,1},2>").unwrap();
        assert_eq!((shaded.bound, shaded.dec), (Some(2), Some(1)));
    }

    #[test]
    fn loops_expand_in_descending_order() {
        let Golden::Jantzen(t) = parse(TABLE_41_1).unwrap() else { panic!() };
        let inst = t.instantiate(&params(&[("a", 4), ("e", 5)])).unwrap();
        let labels: Vec<&str> = inst.rows.iter().map(|r| r.label.as_str()).collect();
        let i = labels.iter().position(|l| *l == "<0,3,4_{2}>").unwrap();
        assert_eq!(&labels[i..i + 3], &["<0,3,4_{2}>", "<0,2,4_{2}>", "<0,1,4_{2}>"]);
        assert_eq!(inst.rows[i + 2].cells[..2], [Some(-1), Some(1)]);
    }

    #[test]
    fn constraint_is_enforced() {
        let Golden::Jantzen(t) = parse(TABLE_41_1).unwrap() else { panic!() };
        assert!(matches!(t.instantiate(&params(&[("a", 3), ("e", 5)])), Err(GoldenError::Constraint(_))));
    }

    #[test]
    fn pair_table_filters_cases_and_expands_ramps() {
        let Golden::Pairs(t) = parse(TABLE_4E).unwrap() else { panic!() };
        let inst = t.instantiate(&params(&[("e", 2)])).unwrap();
        assert!(inst.cases.iter().any(|c| c.mu == "<0_{2},1_{2}>"));
        assert!(!inst.cases.iter().any(|c| c.mu == "<0,1,2,3>"));
        assert!(inst.claims.iter().all(|c| c.to_counts == "4,7"));
    }
}
