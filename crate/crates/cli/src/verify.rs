//! Verification targets and their dispatch.

use std::thread;

use crate::cache::Cache;
use crate::golden::{self, Golden, Params};
use crate::report::VerificationReport;
use crate::suites::{self, BlockRange};
use crate::{prop4e, tables, CliError, CliResult};

/// Every target in the order `verify all` runs and reports them.
pub const TARGETS: [&str; 13] = [
    "3e",
    "4e",
    "41-1",
    "41-2",
    "41-3",
    "41-6",
    "prop-4e",
    "parity",
    "derivative",
    "orders",
    "weight1",
    "weight3-bound",
    "adjust-delta",
];

/// Characteristics used by the weight-1 solver check.
pub const WEIGHT1_PRIMES: [u64; 6] = [0, 2, 3, 5, 7, 11];

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Restrict to this e.
    pub e: Option<usize>,
    /// Smaller ranges for a quick run.
    pub small: bool,
    /// Skip blocks of `S_n` with n above this.
    pub max_n: Option<usize>,
    pub cache: Option<Cache>,
}

impl VerifyOptions {
    fn es(&self, default: &[usize]) -> Vec<usize> {
        match self.e {
            Some(e) => vec![e],
            None => default.to_vec(),
        }
    }

    fn range(&self, es: &[usize], weights: &[usize], max_core: usize) -> BlockRange {
        BlockRange { es: self.es(es), weights: weights.to_vec(), max_core, max_n: self.max_n }
    }
}

fn golden_target(name: &str, opts: &VerifyOptions) -> CliResult<Vec<VerificationReport>> {
    let (_, text) = golden::bundled().into_iter().find(|(n, _)| *n == name).ok_or_else(|| CliError::UnknownTarget(name.into()))?;
    let table = golden::parse(text)?;
    let mut instances: Vec<Params> = table.header().instances.clone();
    if let Some(e) = opts.e {
        instances.retain(|p| p.get("e") == Some(&(e as i64)));
        if instances.is_empty() {
            instances = extra_instance(&table, e)?;
        }
    }
    if opts.small {
        instances.truncate(1);
    }
    instances.iter().map(|p| tables::verify_golden(name, &table, p)).collect()
}

/// An instance at an e not listed in the file: tables with a free `a` use
/// the first listed value of `a` that the table's constraint allows.
fn extra_instance(table: &Golden, e: usize) -> CliResult<Vec<Params>> {
    let header = table.header();
    let mut candidates: Vec<Params> = Vec::new();
    for base in &header.instances {
        let mut p = base.clone();
        p.insert("e".into(), e as i64);
        if !candidates.contains(&p) {
            candidates.push(p);
        }
    }
    let mut out = Vec::new();
    for p in candidates {
        let ok = match &header.require {
            Some(cond) => crate::expr::eval(cond, &p)? != 0,
            None => true,
        };
        if ok {
            out.push(p);
            break;
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage(format!("table {} has no instance at e={e}", header.name)));
    }
    Ok(out)
}

/// Runs one target.
pub fn run_target(name: &str, opts: &VerifyOptions) -> CliResult<Vec<VerificationReport>> {
    let cache = opts.cache.as_ref();
    let small = opts.small;
    match name {
        "3e" | "4e" | "41-1" | "41-2" | "41-3" | "41-6" => golden_target(name, opts),
        "prop-4e" => {
            let es = opts.es(if small { &[3] } else { &[3, 4] });
            if es.iter().any(|&e| e < 3) {
                return Err(CliError::Usage("prop-4e needs e >= 3".into()));
            }
            es.into_iter().map(prop4e::verify).collect()
        }
        "parity" => {
            let r = if small { opts.range(&[2, 3], &[0, 1, 2, 3], 2) } else { opts.range(&[2, 3], &[0, 1, 2, 3, 4], 4) };
            suites::parity(&r, cache)
        }
        "derivative" => {
            let mut out = if small {
                suites::derivative(&opts.range(&[2, 3], &[0, 1, 2, 3], 2), cache)?
            } else {
                suites::derivative(&opts.range(&[2, 3, 4], &[0, 1, 2, 3], 4), cache)?
            };
            let principal = opts.range(if small { &[2] } else { &[2, 3] }, &[4], 0);
            out.extend(suites::derivative(&principal, cache)?);
            Ok(out)
        }
        "orders" => {
            let r = if small { opts.range(&[2, 3], &[0, 1, 2, 3], 2) } else { opts.range(&[2, 3, 4], &[0, 1, 2, 3], 4) };
            suites::orders(&r)
        }
        "weight1" => {
            let r = if small { opts.range(&[2, 3, 4], &[1], 3) } else { opts.range(&[2, 3, 4, 5, 6], &[1], 6) };
            suites::weight1(&r, &WEIGHT1_PRIMES, cache)
        }
        "weight3-bound" => {
            let r = if small { opts.range(&[2, 3], &[3], 2) } else { opts.range(&[2, 3, 4], &[3], 4) };
            suites::weight3_bound(&r, cache)
        }
        "adjust-delta" => {
            let r = if small { opts.range(&[2, 3], &[0, 1, 2, 3], 2) } else { opts.range(&[2, 3], &[0, 1, 2, 3, 4], 3) };
            suites::adjust_delta(&r, &[5, 7])
        }
        other => Err(CliError::UnknownTarget(other.into())),
    }
}

/// Runs `targets` on worker threads; reports come back in target order.
pub fn run_targets(targets: &[&str], opts: &VerifyOptions) -> CliResult<Vec<VerificationReport>> {
    let results: Vec<CliResult<Vec<VerificationReport>>> = thread::scope(|s| {
        let handles: Vec<_> = targets.iter().map(|t| s.spawn(move || run_target(t, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Whether `target` has anything to run at `e`.
fn applies(target: &str, e: usize) -> bool {
    match target {
        "prop-4e" => e >= 3,
        _ => match golden::bundled().into_iter().find(|(n, _)| *n == target) {
            Some((_, text)) => golden::parse(text).is_ok_and(|t| {
                t.header().instances.iter().any(|p| p.get("e") == Some(&(e as i64))) || extra_instance(&t, e).is_ok()
            }),
            None => true,
        },
    }
}

/// Targets for `verify all`, skipping those that do not apply at a fixed e.
pub fn all_targets(opts: &VerifyOptions) -> Vec<&'static str> {
    TARGETS.iter().copied().filter(|t| opts.e.is_none_or(|e| applies(t, e))).collect()
}
