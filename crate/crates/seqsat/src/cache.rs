//! JSON-lines cache for search results, keyed by (canonical pattern text,
//! alphabet size, search kind).
//!
//! The file is treated as untrusted input: malformed lines are skipped, and
//! every surviving entry has its witnesses re-checked against the predicates
//! before it can serve a hit, so a stale or hand-edited cache can only cost a
//! recomputation, never return a wrong value. Only exact results are stored;
//! a budget-truncated result is meaningful only relative to the budget it ran
//! under.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::Path;

use crate::pattern::Pattern;
use crate::predicates::{check_saturated, check_semisaturated, is_u_free};
use crate::search::{SearchKind, SearchResult};
use crate::seq::Sequence;
use crate::text::{format_letters, parse_pattern};
use crate::{Error, Result};

/// Caps on cached dimensions. Entries come from desk-scale searches;
/// re-verification scans a (length+1) x n insertion grid per witness, so a
/// doctored file must not be able to demand unbounded work.
const MAX_ALPHABET: u32 = 512;
const MAX_LENGTH: usize = 4096;
const MAX_PATTERN_LENGTH: usize = 256;

pub type CacheKey = (String, u32, SearchKind);

#[derive(Debug, Default)]
pub struct Cache {
    entries: HashMap<CacheKey, SearchResult>,
    rejected: usize,
}

fn key_of(result: &SearchResult) -> CacheKey {
    (result.pattern.clone(), result.n, result.kind)
}

/// Parses one cache line and enforces the structural invariants of the
/// format (canonical pattern text, letters within the alphabet, witness
/// lengths matching an exact value). Semantic re-verification of the
/// witnesses is separate, in [`verify_result`]; loading an untrusted file
/// runs both.
pub fn parse_line(line: &str) -> Result<SearchResult> {
    let mut result: SearchResult =
        serde_json::from_str(line.trim()).map_err(|e| Error::Parse(e.to_string()))?;
    if result.n == 0 || result.n > MAX_ALPHABET {
        return Err(Error::Parse(format!(
            "alphabet size {} outside 1..={MAX_ALPHABET}",
            result.n
        )));
    }
    let u = parse_pattern(&result.pattern)?;
    if u.len() > MAX_PATTERN_LENGTH {
        return Err(Error::Parse(format!(
            "pattern of {} tokens exceeds the cache limit {MAX_PATTERN_LENGTH}",
            u.len()
        )));
    }
    if u.r() < 2 {
        return Err(Error::Parse("cached patterns need at least 2 distinct letters".into()));
    }
    // Alternate spellings ("0,1,0,1" vs a word form) collapse to one key.
    result.pattern = format_letters(u.letters());
    if result.witnesses.len() as u64 > result.witness_count {
        return Err(Error::Parse("more witnesses than the reported count".into()));
    }
    let exact = result.exact();
    if exact.is_some() && result.witnesses.is_empty() {
        return Err(Error::Parse("an exact entry must carry a witness to re-verify".into()));
    }
    for w in &result.witnesses {
        if w.len() > MAX_LENGTH {
            return Err(Error::Parse(format!(
                "witness of {} letters exceeds the cache limit {MAX_LENGTH}",
                w.len()
            )));
        }
        if let Some(value) = exact {
            if w.len() as u64 != value {
                return Err(Error::Parse(format!(
                    "witness length {} does not match the exact value {value}",
                    w.len()
                )));
            }
        }
        if let Some(&a) = w.iter().find(|&&a| a >= result.n) {
            return Err(Error::Parse(format!(
                "witness letter {a} outside the alphabet 0..{}",
                result.n
            )));
        }
    }
    Ok(result)
}

/// True iff the entry is exact and every stored witness actually satisfies
/// the predicate for its kind. This is the gate a loaded line must pass
/// before the entry can answer a query.
pub fn verify_result(result: &SearchResult) -> bool {
    let Some(value) = result.exact() else { return false };
    let Ok(u) = parse_pattern(&result.pattern) else { return false };
    if result.witnesses.is_empty() {
        return false;
    }
    result.witnesses.iter().all(|w| {
        w.len() as u64 == value
            && Sequence::new(w.clone(), result.n).is_ok_and(|s| match result.kind {
                SearchKind::MinSat => check_saturated(&s, &u).is_success(),
                SearchKind::MinSsat => check_semisaturated(&s, &u).is_success(),
                SearchKind::MaxFree => s.is_r_sparse(u.r()) && is_u_free(&s, &u),
            })
    })
}

impl Cache {
    pub fn new() -> Self {
        Cache::default()
    }

    /// Loads a cache file; a missing file is an empty cache. Lines that fail
    /// to parse or whose witnesses fail re-verification are dropped and
    /// counted in [`Cache::rejected`].
    pub fn load(path: &Path) -> io::Result<Cache> {
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Cache::default()),
            Err(e) => return Err(e),
        };
        let mut cache = Cache::default();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            match parse_line(line) {
                Ok(result) if verify_result(&result) => {
                    cache.entries.insert(key_of(&result), result);
                }
                _ => cache.rejected += 1,
            }
        }
        Ok(cache)
    }

    /// Writes every entry as one JSON line, sorted for a reproducible file.
    pub fn save(&self, path: &Path) -> io::Result<()> {
        let mut lines: Vec<String> = self
            .entries
            .values()
            .map(|r| serde_json::to_string(r).expect("search results serialize"))
            .collect();
        lines.sort();
        let mut out = String::new();
        for line in &lines {
            out.push_str(line);
            out.push('\n');
        }
        fs::write(path, out)
    }

    pub fn get(&self, u: &Pattern, n: u32, kind: SearchKind) -> Option<&SearchResult> {
        self.entries.get(&(format_letters(u.letters()), n, kind))
    }

    /// Stores an exact result, replacing any previous entry for its key.
    /// Returns false (and stores nothing) for budget-truncated results.
    pub fn insert(&mut self, result: SearchResult) -> bool {
        if result.exact().is_none() {
            return false;
        }
        self.entries.insert(key_of(&result), result);
        true
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lines dropped by the last [`Cache::load`].
    pub fn rejected(&self) -> usize {
        self.rejected
    }
}
