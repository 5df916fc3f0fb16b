//! Plain-text enumeration cache.
//!
//! One file per `(kind, n)`: a header line `# hurwitz <kind> n=<n> count=<c>`
//! followed by exactly `c` item lines in canonical order. Files that fail
//! any check are rebuilt.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use hurwitz_core::tree::{enumerate_noncrossing_trees, GeometricTree};
use hurwitz_core::word::{enumerate_fn, is_fn_word};
use hurwitz_core::{Transposition, TranspositionWord};

use crate::config::ItemKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    /// No cache directory was given.
    Disabled,
    Hit,
    /// Missing or invalid; rebuilt and written.
    Refreshed,
}

pub fn cache_path(dir: &Path, kind: ItemKind, n: usize) -> PathBuf {
    dir.join(format!("{}-n{n}.txt", kind.name()))
}

fn header(kind: ItemKind, n: usize, count: usize) -> String {
    format!("# hurwitz {} n={n} count={count}", kind.name())
}

/// Canonical text of every item, in enumeration order.
pub fn enumerate_items(kind: ItemKind, n: usize, cap: usize) -> Result<Vec<String>> {
    Ok(match kind {
        ItemKind::Words => enumerate_fn(n, cap)?.iter().map(ToString::to_string).collect(),
        ItemKind::Trees => enumerate_noncrossing_trees(n, cap)?
            .iter()
            .map(ToString::to_string)
            .collect(),
    })
}

/// Number of items for `(kind, n)`: `n^(n-2)` words and
/// `C(3n-3, n-1) / (2n-1)` trees.
pub fn expected_count(kind: ItemKind, n: usize) -> Option<u128> {
    match (kind, n) {
        (_, 0) => None,
        (_, 1) => Some(1),
        (ItemKind::Words, _) => (n as u128).checked_pow(n as u32 - 2),
        (ItemKind::Trees, _) => {
            let (top, k) = (3 * n as u128 - 3, n as u128 - 1);
            let mut binom: u128 = 1;
            for i in 0..k {
                binom = binom.checked_mul(top - i)? / (i + 1);
            }
            Some(binom / (2 * n as u128 - 1))
        }
    }
}

/// Sort key of one cache line, if it is the canonical text of a valid item.
fn item_key(kind: ItemKind, n: usize, line: &str) -> Option<Vec<Transposition>> {
    let key = match kind {
        ItemKind::Words => {
            let w = TranspositionWord::parse(line, n).ok()?;
            (is_fn_word(&w) && w.to_string() == line).then(|| w.into_letters())?
        }
        ItemKind::Trees => {
            let t = GeometricTree::parse(line, n).ok()?;
            (t.spans_ground_set() && t.to_string() == line).then(|| t.edges().to_vec())?
        }
    };
    Some(key)
}

/// Reads a cache file; `None` if it is absent or malformed.
pub fn read_cache(path: &Path, kind: ItemKind, n: usize) -> Option<Vec<String>> {
    let text = fs::read_to_string(path).ok()?;
    let mut lines = text.split('\n');
    let head = lines.next()?;
    let count: usize = head
        .strip_prefix(&format!("# hurwitz {} n={n} count=", kind.name()))?
        .parse()
        .ok()?;
    if expected_count(kind, n)? != count as u128 {
        return None;
    }
    let items: Vec<String> = lines.by_ref().take(count).map(str::to_string).collect();
    // exactly `count` lines, then only the final newline
    if items.len() != count || lines.collect::<Vec<_>>() != [""] {
        return None;
    }
    let keys = items.iter().map(|l| item_key(kind, n, l)).collect::<Option<Vec<_>>>()?;
    // strictly increasing keys: distinct, canonical order, hence complete
    if !keys.windows(2).all(|p| p[0] < p[1]) {
        return None;
    }
    Some(items)
}

pub fn write_cache(path: &Path, kind: ItemKind, n: usize, items: &[String]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
    }
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp).with_context(|| format!("writing {}", tmp.display()))?;
        writeln!(f, "{}", header(kind, n, items.len()))?;
        for item in items {
            writeln!(f, "{item}")?;
        }
        f.sync_all()?;
    }
    fs::rename(&tmp, path).with_context(|| format!("replacing {}", path.display()))?;
    Ok(())
}

/// Items from the cache when it is valid, otherwise freshly enumerated (and
/// written back when a directory is configured).
pub fn load_or_enumerate(
    dir: Option<&Path>,
    kind: ItemKind,
    n: usize,
    cap: usize,
) -> Result<(Vec<String>, CacheStatus)> {
    let Some(dir) = dir else {
        return Ok((enumerate_items(kind, n, cap)?, CacheStatus::Disabled));
    };
    // the cap guards cached reads too
    if n > cap {
        enumerate_items(kind, n, cap)?;
    }
    let path = cache_path(dir, kind, n);
    if let Some(items) = read_cache(&path, kind, n) {
        return Ok((items, CacheStatus::Hit));
    }
    let items = enumerate_items(kind, n, cap)?;
    write_cache(&path, kind, n, &items)?;
    Ok((items, CacheStatus::Refreshed))
}
