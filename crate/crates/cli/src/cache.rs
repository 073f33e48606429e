//! On-disk cache of LLT columns, one JSON file per `(e, block label)`.
//!
//! Each file stores its key, a format version and a SHA-256 digest of the
//! serialized columns. A file that fails to parse, carries another key or
//! version, or whose digest does not match is ignored and recomputed.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use fockdec::blocks::{enumerate_block, BlockDescriptor};
use fockdec::fock::DecompositionContext;
use fockdec::{Partition, VPolynomial};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::{CliError, CliResult};

pub const CACHE_VERSION: u32 = 1;

/// Columns of d⁰ keyed by μ, each a map λ → d_{λμ}(v), all as text.
type TextColumns = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    e: usize,
    block: String,
    weight: usize,
    digest: String,
    columns: TextColumns,
}

fn digest(columns: &TextColumns) -> String {
    let bytes = serde_json::to_vec(columns).expect("string maps always serialize");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// A cache directory.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl AsRef<Path>) -> CliResult<Self> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir).map_err(|err| CliError::Cache(format!("{}: {err}", dir.display())))?;
        Ok(Cache { dir })
    }

    fn path(&self, block: &BlockDescriptor) -> PathBuf {
        let key = format!("e{}-w{}-{}", block.e, block.weight, block.label());
        let name = Sha256::digest(key.as_bytes()).iter().take(12).map(|b| format!("{b:02x}")).collect::<String>();
        self.dir.join(format!("{name}.json"))
    }

    /// The cached columns of a block, if a valid entry exists.
    pub fn load(&self, block: &BlockDescriptor) -> Option<BTreeMap<Partition, BTreeMap<Partition, VPolynomial>>> {
        let text = fs::read_to_string(self.path(block)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        let key_ok = entry.version == CACHE_VERSION
            && entry.e == block.e
            && entry.block == block.label()
            && entry.weight == block.weight;
        if !key_ok || entry.digest != digest(&entry.columns) {
            return None;
        }
        let mut out = BTreeMap::new();
        for (mu, column) in entry.columns {
            let mut col = BTreeMap::new();
            for (lambda, d) in column {
                col.insert(lambda.parse().ok()?, d.parse().ok()?);
            }
            out.insert(mu.parse().ok()?, col);
        }
        Some(out)
    }

    /// Writes the columns of every partition of the block.
    pub fn store(
        &self,
        block: &BlockDescriptor,
        columns: &BTreeMap<Partition, BTreeMap<Partition, VPolynomial>>,
    ) -> CliResult<()> {
        let columns: TextColumns = columns
            .iter()
            .map(|(mu, col)| (mu.to_string(), col.iter().map(|(l, d)| (l.to_string(), d.to_string())).collect()))
            .collect();
        let entry = Entry {
            version: CACHE_VERSION,
            e: block.e,
            block: block.label(),
            weight: block.weight,
            digest: digest(&columns),
            columns,
        };
        let path = self.path(block);
        let text = serde_json::to_string(&entry).map_err(|err| CliError::Cache(err.to_string()))?;
        fs::write(&path, text).map_err(|err| CliError::Cache(format!("{}: {err}", path.display())))
    }
}

/// Fills `ctx` with the columns of a block, from the cache when possible,
/// and writes freshly computed blocks back.
pub fn warm_block(ctx: &mut DecompositionContext, block: &BlockDescriptor, cache: Option<&Cache>) -> CliResult<()> {
    let Some(cache) = cache else { return Ok(()) };
    if let Some(columns) = cache.load(block) {
        for (mu, col) in columns {
            ctx.seed_column(mu, col);
        }
        return Ok(());
    }
    let mut columns = BTreeMap::new();
    for mu in enumerate_block(block)? {
        let col = ctx.column(&mu)?;
        columns.insert(mu, col);
    }
    cache.store(block, &columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fockdec::blocks::block_with_core;

    fn temp_dir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("fockdec-cache-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        dir
    }

    #[test]
    fn round_trip_and_corruption_fallback() {
        let dir = temp_dir("rt");
        let cache = Cache::new(&dir).unwrap();
        let block = block_with_core(&Partition::empty(), 2, 2).unwrap();
        let mut ctx = DecompositionContext::new(2).unwrap();
        warm_block(&mut ctx, &block, Some(&cache)).unwrap();
        let loaded = cache.load(&block).expect("entry written");
        assert_eq!(loaded.len(), 5);
        for (mu, col) in &loaded {
            assert_eq!(&ctx.column(mu).unwrap(), col);
        }

        let path = cache.path(&block);
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replacen("\"v\"", "\"v^3\"", 1)).unwrap();
        assert!(cache.load(&block).is_none(), "digest mismatch must be rejected");
        fs::write(&path, "{not json").unwrap();
        assert!(cache.load(&block).is_none());

        let mut fresh = DecompositionContext::new(2).unwrap();
        warm_block(&mut fresh, &block, Some(&cache)).unwrap();
        assert_eq!(cache.load(&block).unwrap(), loaded);
        fs::remove_dir_all(dir).unwrap();
    }
}
