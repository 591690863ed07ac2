//! On-disk classification cache: one versioned JSON document per length,
//! keyed by the format version and a hash of the rule set. Stale or
//! corrupted files are simply regenerated; correctness never depends on the
//! cache.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::output::OutputRecord;

pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV_VAR: &str = "TOURNALINK_CACHE";

/// A stable description of the active rule set; any change to the rules
/// must change this string so cached tables regenerate.
const RULE_SET_DESCRIPTOR: &str = concat!(
    "T2.4 length<=7;",
    "L3.4 0|7|{1,1}|{6,6}|{1,5,5,6}|{1,2,2,6};",
    "P3.5 four-subset-sum-8;",
    "P3.7 seven-listed+duals;",
    "base-IL 6+4+duals=15;",
    "O4.2 forward-closure dual-closed;",
    "L4.1/L4.3 first-clause chains;",
    "L4.4 prefix m<8 n-m<8;",
    "L4.5 n9 prefix4=7, n10 prefix5=11;",
);

/// FNV-1a hash of the rule-set descriptor, hex encoded.
pub fn rule_set_hash() -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in RULE_SET_DESCRIPTOR.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheDoc {
    format_version: u32,
    rule_set_hash: String,
    n: usize,
    entries: Vec<OutputRecord>,
}

/// Why a cache lookup did not produce a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheMiss {
    Absent,
    FormatVersion,
    RuleSetHash,
    Corrupt,
}

impl CacheMiss {
    pub fn describe(&self) -> &'static str {
        match self {
            CacheMiss::Absent => "no cached table",
            CacheMiss::FormatVersion => "format version changed",
            CacheMiss::RuleSetHash => "rule-set hash changed",
            CacheMiss::Corrupt => "cached table unreadable",
        }
    }
}

/// Handle on a cache directory.
#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    /// Resolve the cache directory: the override variable when set,
    /// otherwise `~/.cache/tournalink`, falling back to the temp dir.
    pub fn resolve() -> Self {
        if let Ok(dir) = std::env::var(CACHE_ENV_VAR) {
            return TableCache::at(dir);
        }
        let base = std::env::var_os("HOME")
            .map(|home| Path::new(&home).join(".cache"))
            .unwrap_or_else(std::env::temp_dir);
        TableCache::at(base.join("tournalink"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, n: usize) -> PathBuf {
        self.dir.join(format!("table-n{n}.json"))
    }

    /// Load the cached table for length n, validating version and rule-set
    /// hash.
    pub fn load(&self, n: usize) -> Result<Vec<OutputRecord>, CacheMiss> {
        let path = self.path_for(n);
        let text = fs::read_to_string(&path).map_err(|_| CacheMiss::Absent)?;
        let doc: CacheDoc = serde_json::from_str(&text).map_err(|_| CacheMiss::Corrupt)?;
        if doc.format_version != CACHE_FORMAT_VERSION {
            return Err(CacheMiss::FormatVersion);
        }
        if doc.rule_set_hash != rule_set_hash() {
            return Err(CacheMiss::RuleSetHash);
        }
        if doc.n != n {
            return Err(CacheMiss::Corrupt);
        }
        Ok(doc.entries)
    }

    pub fn store(&self, n: usize, entries: &[OutputRecord]) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let doc = CacheDoc {
            format_version: CACHE_FORMAT_VERSION,
            rule_set_hash: rule_set_hash(),
            n,
            entries: entries.to_vec(),
        };
        let text = serde_json::to_string(&doc).expect("cache doc serializes");
        fs::write(self.path_for(n), text)
    }
}
