//! Exhaustive computation of the minimum saturated / semisaturated length
//! and the maximum avoiding length at desk scale, plus machine checks of the
//! conjectured formulas and the reference tables.
//!
//! All enumeration runs over canonical sequences (letters first appear in
//! increasing order), which collapses isomorphism classes; minimality claims
//! follow from fully exhausting every shorter level.

use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embed::contains_through_on;
use crate::pattern::Pattern;
use crate::predicates::{find_admissible, Scratch};
use crate::tables::{self, RowVerification};
use crate::text::format_letters;
use crate::{Error, Letter, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchKind {
    MinSat,
    MinSsat,
    MaxFree,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Node budget over the whole search (every generated prefix counts).
    pub max_nodes: u64,
    /// Witnesses retained in the result; the full count is still reported.
    pub witness_cap: usize,
    /// Worker threads; 0 uses the ambient thread pool.
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_nodes: 200_000_000, witness_cap: 32, jobs: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchValue {
    Exact { value: u64 },
    /// Levels below `verified_lower` were fully exhausted, so the true value
    /// is at least that; `upper` carries the best closed-form cap if any.
    BudgetExceeded { verified_lower: u64, upper: Option<u64> },
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
    pub first_level: u64,
    pub last_level: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchResult {
    pub kind: SearchKind,
    pub pattern: String,
    pub n: u32,
    pub value: SearchValue,
    pub witnesses: Vec<Vec<Letter>>,
    /// Total sequences achieving the value (witnesses may be truncated).
    pub witness_count: u64,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn exact(&self) -> Option<u64> {
        match self.value {
            SearchValue::Exact { value } => Some(value),
            SearchValue::BudgetExceeded { .. } => None,
        }
    }
}

struct Budget {
    cap: u64,
    used: AtomicU64,
    tripped: AtomicBool,
}

impl Budget {
    fn new(cap: u64) -> Self {
        Budget { cap, used: AtomicU64::new(0), tripped: AtomicBool::new(false) }
    }

    fn flush(&self, local: u64) {
        let prev = self.used.fetch_add(local, Ordering::Relaxed);
        if prev.saturating_add(local) > self.cap {
            self.tripped.store(true, Ordering::Relaxed);
        }
    }

    fn ok(&self) -> bool {
        !self.tripped.load(Ordering::Relaxed)
    }
}

/// Shared shape of one level / one subtree exploration.
struct Walk<'a> {
    u: &'a Pattern,
    n: usize,
    r: usize,
    /// Enforce pattern-freeness while extending (minimum-saturated and
    /// maximum-avoiding trees; the semisaturated tree is unconstrained).
    free: bool,
    /// When the pattern has no once-occurring letter, any unused alphabet
    /// letter can always be inserted, so passing leaves use all n letters;
    /// branches that cannot reach a full alphabet are cut.
    need_full_alphabet: bool,
    /// Leaf length for the minimum searches; None for the maximum search.
    target: Option<usize>,
    budget: &'a Budget,
    witness_cap: usize,
}

struct WalkState {
    seq: Vec<Letter>,
    occ: Vec<Vec<usize>>,
    used: usize,
    scratch: Scratch,
    local_nodes: u64,
}

impl WalkState {
    fn from_prefix(prefix: &[Letter], n: usize) -> Self {
        let mut occ = vec![Vec::new(); n];
        let mut used = 0usize;
        for (i, &a) in prefix.iter().enumerate() {
            occ[a as usize].push(i);
            used = used.max(a as usize + 1);
        }
        WalkState {
            seq: prefix.to_vec(),
            occ,
            used,
            scratch: Scratch::new(),
            local_nodes: 0,
        }
    }

    fn charge(&mut self, budget: &Budget) {
        self.local_nodes += 1;
        if self.local_nodes >= 1024 {
            budget.flush(self.local_nodes);
            self.local_nodes = 0;
        }
    }
}

#[derive(Default)]
struct LevelOut {
    found: u64,
    witnesses: Vec<Vec<Letter>>,
}

impl Walk<'_> {
    /// Letters that may follow the current prefix: anything already seen
    /// plus the single next-unseen letter, minus sparsity conflicts.
    fn candidates(&self, st: &WalkState) -> Vec<Letter> {
        let hi = if st.used < self.n { st.used } else { self.n - 1 };
        let from = st.seq.len().saturating_sub(self.r - 1);
        let mut out = Vec::with_capacity(hi + 1);
        'letters: for a in 0..=(hi as Letter) {
            for &b in &st.seq[from..] {
                if b == a {
                    continue 'letters;
                }
            }
            out.push(a);
        }
        out
    }

    fn push(&self, st: &mut WalkState, a: Letter) {
        st.occ[a as usize].push(st.seq.len());
        st.seq.push(a);
        st.used = st.used.max(a as usize + 1);
    }

    fn pop(&self, st: &mut WalkState, prev_used: usize) {
        let a = st.seq.pop().unwrap();
        st.occ[a as usize].pop();
        st.used = prev_used;
    }

    /// Extending by `a` keeps the tree's invariants: the new token must not
    /// complete a pattern copy (free trees), and enough positions must
    /// remain to introduce every missing letter (full-alphabet trees).
    fn admissible_child(&self, st: &mut WalkState, a: Letter) -> bool {
        if self.need_full_alphabet {
            if let Some(target) = self.target {
                let used_after = st.used.max(a as usize + 1);
                let remaining_after = target - st.seq.len() - 1;
                if used_after + remaining_after < self.n {
                    return false;
                }
            }
        }
        if !self.free {
            return true;
        }
        let pos = st.seq.len();
        st.occ[a as usize].push(pos);
        st.seq.push(a);
        let fresh_copy =
            contains_through_on(&st.seq, &st.occ, self.n as u32, self.u, pos).is_some();
        st.seq.pop();
        st.occ[a as usize].pop();
        !fresh_copy
    }

    /// Depth-first enumeration of one level: visit every extension of the
    /// prefix out to the target length and test the saturation predicate at
    /// leaves.
    fn run_level(&self, st: &mut WalkState, out: &mut LevelOut) {
        if st.seq.len() == self.target.expect("level walks have a target") {
            let blocked =
                find_admissible(&st.seq, self.n as u32, self.u, &mut st.scratch, true).is_none();
            if blocked {
                out.found += 1;
                if out.witnesses.len() < self.witness_cap {
                    out.witnesses.push(st.seq.clone());
                }
            }
            return;
        }
        if !self.budget.ok() {
            return;
        }
        for a in self.candidates(st) {
            if !self.admissible_child(st, a) {
                continue;
            }
            let prev_used = st.used;
            self.push(st, a);
            st.charge(self.budget);
            self.run_level(st, out);
            self.pop(st, prev_used);
        }
    }

    /// Depth-first sweep for the maximum length: no depth cap, record the
    /// deepest sequences seen.
    fn run_max(&self, st: &mut WalkState, best: &mut (usize, u64, Vec<Vec<Letter>>)) {
        let depth = st.seq.len();
        if depth > best.0 {
            *best = (depth, 1, vec![st.seq.clone()]);
        } else if depth == best.0 {
            best.1 += 1;
            if best.2.len() < self.witness_cap {
                best.2.push(st.seq.clone());
            }
        }
        if !self.budget.ok() {
            return;
        }
        for a in self.candidates(st) {
            if !self.admissible_child(st, a) {
                continue;
            }
            let prev_used = st.used;
            self.push(st, a);
            st.charge(self.budget);
            self.run_max(st, best);
            self.pop(st, prev_used);
        }
    }

    /// Canonical prefixes of exactly `depth` tokens, in lexicographic order,
    /// for splitting the tree across workers. Shorter dead ends are returned
    /// separately (they are complete sequences in the maximum search).
    fn seeds(&self, depth: usize) -> (Vec<Vec<Letter>>, Vec<Vec<Letter>>) {
        let mut full = Vec::new();
        let mut dead = Vec::new();
        let mut st = WalkState::from_prefix(&[], self.n);
        self.collect_seeds(&mut st, depth, &mut full, &mut dead);
        self.budget.flush(st.local_nodes);
        (full, dead)
    }

    fn collect_seeds(
        &self,
        st: &mut WalkState,
        depth: usize,
        full: &mut Vec<Vec<Letter>>,
        dead: &mut Vec<Vec<Letter>>,
    ) {
        if st.seq.len() == depth {
            full.push(st.seq.clone());
            return;
        }
        let mut extended = false;
        for a in self.candidates(st) {
            if !self.admissible_child(st, a) {
                continue;
            }
            extended = true;
            let prev_used = st.used;
            self.push(st, a);
            st.charge(self.budget);
            self.collect_seeds(st, depth, full, dead);
            self.pop(st, prev_used);
        }
        if !extended {
            dead.push(st.seq.clone());
        }
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(f)
    }
}

const SEED_DEPTH: usize = 7;

fn level_bounds(kind: SearchKind, u: &Pattern, n: u32) -> Result<(u64, Option<u64>)> {
    let report = match kind {
        SearchKind::MinSat => crate::bounds::sat_bounds(u, n)?,
        SearchKind::MinSsat => crate::bounds::ssat_bounds(u, n)?,
        SearchKind::MaxFree => return Ok((1, None)),
    };
    Ok((report.lower.unwrap_or(1).max(1), report.upper))
}

fn run_min(
    kind: SearchKind,
    u: &Pattern,
    n: u32,
    config: &SearchConfig,
) -> Result<SearchResult> {
    let start = Instant::now();
    let (lo, upper) = level_bounds(kind, u, n)?;
    let budget = Budget::new(config.max_nodes);
    let need_full_alphabet = u.singleton_count() == 0;
    let free = kind == SearchKind::MinSat;

    let mut level = lo;
    let mut outcome = None;
    while outcome.is_none() {
        let walk = Walk {
            u,
            n: n as usize,
            r: u.r() as usize,
            free,
            need_full_alphabet,
            target: Some(level as usize),
            budget: &budget,
            witness_cap: config.witness_cap,
        };
        let out = with_pool(config.jobs, || {
            let seed_depth = (level as usize).min(SEED_DEPTH);
            let (seeds, _) = walk.seeds(seed_depth);
            let parts: Vec<LevelOut> = seeds
                .par_iter()
                .map(|prefix| {
                    let mut st = WalkState::from_prefix(prefix, walk.n);
                    let mut out = LevelOut::default();
                    walk.run_level(&mut st, &mut out);
                    walk.budget.flush(st.local_nodes);
                    out
                })
                .collect();
            let mut merged = LevelOut::default();
            for p in parts {
                merged.found += p.found;
                for w in p.witnesses {
                    if merged.witnesses.len() < walk.witness_cap {
                        merged.witnesses.push(w);
                    }
                }
            }
            merged
        });

        if !budget.ok() {
            outcome = Some((
                SearchValue::BudgetExceeded { verified_lower: level, upper },
                Vec::new(),
                0,
            ));
        } else if out.found > 0 {
            outcome = Some((SearchValue::Exact { value: level }, out.witnesses, out.found));
        } else {
            level += 1;
            if let Some(hi) = upper {
                assert!(
                    level <= hi,
                    "exhausted every length up to the proven upper bound {hi} without \
                     a witness; a predicate or bound clause is wrong"
                );
            }
        }
    }

    let (value, witnesses, witness_count) = outcome.unwrap();
    Ok(SearchResult {
        kind,
        pattern: format_letters(u.letters()),
        n,
        value,
        witnesses,
        witness_count,
        stats: SearchStats {
            nodes: budget.used.load(Ordering::Relaxed),
            elapsed_ms: start.elapsed().as_millis() as u64,
            first_level: lo,
            last_level: level,
        },
    })
}

fn run_max(u: &Pattern, n: u32, config: &SearchConfig) -> Result<SearchResult> {
    if u.r() < 2 {
        return Err(Error::unsupported("the maximum search needs at least 2 distinct pattern letters"));
    }
    let start = Instant::now();
    let budget = Budget::new(config.max_nodes);
    let walk = Walk {
        u,
        n: n as usize,
        r: u.r() as usize,
        free: true,
        need_full_alphabet: false,
        target: None,
        budget: &budget,
        witness_cap: config.witness_cap,
    };
    let (best_len, count, witnesses) = with_pool(config.jobs, || {
        let (seeds, dead) = walk.seeds(SEED_DEPTH);
        let parts: Vec<(usize, u64, Vec<Vec<Letter>>)> = seeds
            .par_iter()
            .map(|prefix| {
                let mut st = WalkState::from_prefix(prefix, walk.n);
                let mut best = (0, 0, Vec::new());
                walk.run_max(&mut st, &mut best);
                walk.budget.flush(st.local_nodes);
                best
            })
            .collect();
        // The empty sequence always avoids the pattern, so the fold starts
        // from it; any seed or dead end beats depth 0 for n >= 1.
        let mut best: (usize, u64, Vec<Vec<Letter>>) = (0, 1, vec![Vec::new()]);
        for part in parts.into_iter().chain(dead.into_iter().map(|d| (d.len(), 1, vec![d]))) {
            if part.0 > best.0 {
                best = part;
            } else if part.0 == best.0 {
                best.1 += part.1;
                for w in part.2 {
                    if best.2.len() < walk.witness_cap {
                        best.2.push(w);
                    }
                }
            }
        }
        best
    });

    let value = if budget.ok() {
        SearchValue::Exact { value: best_len as u64 }
    } else {
        SearchValue::BudgetExceeded { verified_lower: best_len as u64, upper: None }
    };
    Ok(SearchResult {
        kind: SearchKind::MaxFree,
        pattern: format_letters(u.letters()),
        n,
        value,
        witnesses,
        witness_count: count,
        stats: SearchStats {
            nodes: budget.used.load(Ordering::Relaxed),
            elapsed_ms: start.elapsed().as_millis() as u64,
            first_level: best_len as u64,
            last_level: best_len as u64,
        },
    })
}

pub fn search(kind: SearchKind, u: &Pattern, n: u32, config: &SearchConfig) -> Result<SearchResult> {
    if n < 1 {
        return Err(Error::unsupported("the alphabet must have at least 1 letter"));
    }
    match kind {
        SearchKind::MinSat | SearchKind::MinSsat => run_min(kind, u, n, config),
        SearchKind::MaxFree => run_max(u, n, config),
    }
}

pub fn min_saturated(u: &Pattern, n: u32, config: &SearchConfig) -> Result<SearchResult> {
    search(SearchKind::MinSat, u, n, config)
}

pub fn min_semisaturated(u: &Pattern, n: u32, config: &SearchConfig) -> Result<SearchResult> {
    search(SearchKind::MinSsat, u, n, config)
}

pub fn max_free(u: &Pattern, n: u32, config: &SearchConfig) -> Result<SearchResult> {
    search(SearchKind::MaxFree, u, n, config)
}

/// Same search with every witness retained, for structural sweeps over the
/// complete set of minimal sequences.
pub fn enumerate_minimal(
    u: &Pattern,
    n: u32,
    kind: SearchKind,
    config: &SearchConfig,
) -> Result<SearchResult> {
    let all = SearchConfig { witness_cap: usize::MAX, ..*config };
    search(kind, u, n, &all)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PointStatus {
    Confirmed,
    Refuted,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConjecturePoint {
    pub s: u32,
    pub n: u32,
    pub status: PointStatus,
    pub detail: String,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture: String,
    pub points: Vec<ConjecturePoint>,
}

impl ConjectureReport {
    pub fn refuted(&self) -> bool {
        self.points.iter().any(|p| p.status == PointStatus::Refuted)
    }

    pub fn all_confirmed(&self) -> bool {
        self.points.iter().all(|p| p.status == PointStatus::Confirmed)
    }
}

fn occurrence_counts(w: &[Letter], n: usize) -> Vec<usize> {
    let mut counts = vec![0usize; n];
    for &a in w {
        counts[a as usize] += 1;
    }
    counts
}

/// Consecutive occurrences of each letter must carry matching inner
/// neighbours: for occurrences at i < j with none between, w[i+1] == w[j-1].
fn gap_endpoints_match(w: &[Letter]) -> bool {
    let n = w.iter().map(|&a| a as usize + 1).max().unwrap_or(0);
    let mut last = vec![None; n];
    for (j, &a) in w.iter().enumerate() {
        if let Some(i) = last[a as usize] {
            let i: usize = i;
            if w[i + 1] != w[j - 1] {
                return false;
            }
        }
        last[a as usize] = Some(j);
    }
    true
}

/// First-occurrence order equals last-occurrence order. Canonical witnesses
/// introduce letters in increasing order, so the last occurrences must be
/// increasing by letter.
fn occurrence_orders_agree(w: &[Letter], n: usize) -> bool {
    let mut last = vec![0usize; n];
    for (i, &a) in w.iter().enumerate() {
        last[a as usize] = i;
    }
    last.windows(2).all(|p| p[0] < p[1])
}

/// Checks the conjectured shape of every shortest saturated host of the
/// alternation of order `s`: exact length n*s-s+1; for odd s, matching
/// first/last occurrence orders with end letters appearing (s+1)/2 times and
/// the rest s times; and matching neighbours around every occurrence gap.
pub fn verify_conjecture_sat_alt(
    s: u32,
    n_range: RangeInclusive<u32>,
    config: &SearchConfig,
) -> Result<ConjectureReport> {
    let u = Pattern::alternation(s);
    let mut points = Vec::new();
    for n in n_range {
        let res = enumerate_minimal(&u, n, SearchKind::MinSat, config)?;
        let value = match res.value {
            SearchValue::Exact { value } => value,
            SearchValue::BudgetExceeded { verified_lower, .. } => {
                points.push(ConjecturePoint {
                    s,
                    n,
                    status: PointStatus::Skipped,
                    detail: format!("budget exhausted; value is at least {verified_lower}"),
                    counterexample: None,
                });
                continue;
            }
        };
        let predicted = (n as u64) * (s as u64) - s as u64 + 1;
        let mut point = ConjecturePoint {
            s,
            n,
            status: PointStatus::Confirmed,
            detail: format!(
                "value {value}, predicted {predicted}, {} minimal witnesses",
                res.witness_count
            ),
            counterexample: None,
        };
        if value != predicted {
            point.status = PointStatus::Refuted;
            point.detail = format!("minimum length {value} differs from predicted {predicted}");
            point.counterexample = res.witnesses.first().map(|w| format_letters(w));
        } else {
            'witnesses: for w in &res.witnesses {
                if !gap_endpoints_match(w) {
                    point.status = PointStatus::Refuted;
                    point.detail = "a minimal witness has mismatched neighbours around an \
                                    occurrence gap"
                        .to_string();
                    point.counterexample = Some(format_letters(w));
                    break 'witnesses;
                }
                if s % 2 == 1 {
                    let counts = occurrence_counts(w, n as usize);
                    let end = ((s + 1) / 2) as usize;
                    let ends_ok = n == 1
                        || (counts[0] == end && counts[n as usize - 1] == end);
                    let mids_ok =
                        counts[1..n.saturating_sub(1) as usize].iter().all(|&c| c == s as usize);
                    if !(ends_ok && mids_ok && occurrence_orders_agree(w, n as usize)) {
                        point.status = PointStatus::Refuted;
                        point.detail = "a minimal witness breaks the odd-order occurrence \
                                        structure"
                            .to_string();
                        point.counterexample = Some(format_letters(w));
                        break 'witnesses;
                    }
                }
            }
        }
        points.push(point);
    }
    Ok(ConjectureReport { conjecture: "shortest-saturated-alternation".to_string(), points })
}

/// Checks the conjectured shape of every shortest semisaturated host of the
/// alternation of order `s`: exact length n(s+2)/2 (even) or n(s+1)/2+1
/// (odd); for even s every letter occurs (s+2)/2 times; for odd s exactly
/// one letter occurs (s+1)/2+1 times and the rest (s+1)/2.
pub fn verify_conjecture_ssat_alt(
    s: u32,
    n_range: RangeInclusive<u32>,
    config: &SearchConfig,
) -> Result<ConjectureReport> {
    let u = Pattern::alternation(s);
    let mut points = Vec::new();
    for n in n_range {
        let res = enumerate_minimal(&u, n, SearchKind::MinSsat, config)?;
        let value = match res.value {
            SearchValue::Exact { value } => value,
            SearchValue::BudgetExceeded { verified_lower, .. } => {
                points.push(ConjecturePoint {
                    s,
                    n,
                    status: PointStatus::Skipped,
                    detail: format!("budget exhausted; value is at least {verified_lower}"),
                    counterexample: None,
                });
                continue;
            }
        };
        let (nn, ss) = (n as u64, s as u64);
        let predicted = if s % 2 == 0 { nn * (ss + 2) / 2 } else { nn * (ss + 1) / 2 + 1 };
        let mut point = ConjecturePoint {
            s,
            n,
            status: PointStatus::Confirmed,
            detail: format!(
                "value {value}, predicted {predicted}, {} minimal witnesses",
                res.witness_count
            ),
            counterexample: None,
        };
        if value != predicted {
            point.status = PointStatus::Refuted;
            point.detail = format!("minimum length {value} differs from predicted {predicted}");
            point.counterexample = res.witnesses.first().map(|w| format_letters(w));
        } else {
            for w in &res.witnesses {
                let counts = occurrence_counts(w, n as usize);
                let ok = if s % 2 == 0 {
                    let each = ((s + 2) / 2) as usize;
                    counts.iter().all(|&c| c == each)
                } else {
                    let small = ((s + 1) / 2) as usize;
                    let bigger = counts.iter().filter(|&&c| c == small + 1).count();
                    let smaller = counts.iter().filter(|&&c| c == small).count();
                    bigger == 1 && smaller == n as usize - 1
                };
                if !ok {
                    point.status = PointStatus::Refuted;
                    point.detail = "a minimal witness breaks the occurrence-count structure"
                        .to_string();
                    point.counterexample = Some(format_letters(w));
                    break;
                }
            }
        }
        points.push(point);
    }
    Ok(ConjectureReport { conjecture: "shortest-semisaturated-alternation".to_string(), points })
}

/// Re-verifies every reference row: the saturation rows must pass the strict
/// checker, the semisaturation rows the strict or anchored checker, and all
/// lengths must match the conjectured formulas.
pub fn verify_tables() -> ConjectureReport {
    let mut points = Vec::new();
    for (i, row) in tables::SATURATED_ROWS.iter().enumerate() {
        let verdict = tables::verify_saturated_row(row);
        let length_ok =
            row.letters.len() == tables::conjectured_saturated_length(row.order, row.alphabet_size);
        let confirmed = verdict == RowVerification::Strict && length_ok;
        points.push(ConjecturePoint {
            s: row.order,
            n: row.alphabet_size,
            status: if confirmed { PointStatus::Confirmed } else { PointStatus::Refuted },
            detail: format!("saturated row {i}: {verdict:?}, length {}", row.letters.len()),
            counterexample: (!confirmed).then(|| format_letters(row.letters)),
        });
    }
    for (i, row) in tables::SEMISATURATED_ROWS.iter().enumerate() {
        let verdict = tables::verify_semisaturated_row(row);
        let length_ok = row.letters.len()
            == tables::conjectured_semisaturated_length(row.order, row.alphabet_size);
        let confirmed = verdict != RowVerification::Failed && length_ok;
        points.push(ConjecturePoint {
            s: row.order,
            n: row.alphabet_size,
            status: if confirmed { PointStatus::Confirmed } else { PointStatus::Refuted },
            detail: format!("semisaturated row {i}: {verdict:?}, length {}", row.letters.len()),
            counterexample: (!confirmed).then(|| format_letters(row.letters)),
        });
    }
    ConjectureReport { conjecture: "reference-tables".to_string(), points }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{check_saturated, check_semisaturated};
    use crate::seq::Sequence;

    fn pat(letters: &[u32]) -> Pattern {
        Pattern::new(letters).unwrap()
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn min_saturated_alternation_examples() {
        let abab = pat(&[0, 1, 0, 1]);
        for n in 1..=4 {
            let res = min_saturated(&abab, n, &cfg()).unwrap();
            assert_eq!(res.exact(), Some(2 * n as u64 - 1), "n={n}");
            for w in &res.witnesses {
                let s = Sequence::new(w.clone(), n).unwrap();
                assert!(check_saturated(&s, &abab).is_success());
                assert_eq!(&crate::seq::canonical_form(w), w);
            }
        }
        let res = min_saturated(&pat(&[0, 1]), 5, &cfg()).unwrap();
        assert_eq!(res.exact(), Some(1));
    }

    #[test]
    fn min_saturated_matches_bound_window() {
        let u3 = Pattern::alternation(3);
        let res = min_saturated(&u3, 4, &cfg()).unwrap();
        let b = crate::bounds::sat_bounds(&u3, 4).unwrap();
        let v = res.exact().unwrap();
        assert!(b.lower.unwrap() <= v && v <= b.upper.unwrap());
        assert_eq!(v, 10, "conjectured ns-s+1 at s=3, n=4");
    }

    #[test]
    fn min_semisaturated_examples() {
        let res = min_semisaturated(&pat(&[0, 1, 0]), 3, &cfg()).unwrap();
        assert_eq!(res.exact(), Some(3));

        let u3 = Pattern::alternation(3);
        let res = min_semisaturated(&u3, 5, &cfg()).unwrap();
        assert_eq!(res.exact(), Some(11));
        for w in &res.witnesses {
            let s = Sequence::new(w.clone(), 5).unwrap();
            assert!(check_semisaturated(&s, &u3).is_success());
        }
    }

    // The reference rows for order 2 on 6 letters have length 12 and do
    // verify as semisaturated, but exhaustive search (independently
    // confirmed by an unpruned naive enumeration) finds 49 shorter hosts of
    // length 9, so the conjectured n(s+2)/2 minimum does not hold there.
    #[test]
    fn min_semisaturated_beats_even_reference_rows() {
        let abab = pat(&[0, 1, 0, 1]);
        let res = min_semisaturated(&abab, 6, &cfg()).unwrap();
        assert_eq!(res.exact(), Some(9));
        assert_eq!(res.witness_count, 49);
        assert!(res.witnesses.iter().any(|w| w == &vec![0, 1, 0, 2, 3, 4, 0, 5, 3]));
        for w in &res.witnesses {
            let s = Sequence::new(w.clone(), 6).unwrap();
            assert!(check_semisaturated(&s, &abab).is_success());
        }
    }

    #[test]
    fn max_free_examples() {
        let abab = pat(&[0, 1, 0, 1]);
        let res = max_free(&abab, 3, &cfg()).unwrap();
        assert_eq!(res.exact(), Some(5));

        let res = max_free(&pat(&[0, 1]), 9, &cfg()).unwrap();
        assert_eq!(res.exact(), Some(1));
    }

    #[test]
    fn sandwich_on_small_points() {
        let u = Pattern::alternation(3);
        let ssat = min_semisaturated(&u, 3, &cfg()).unwrap().exact().unwrap();
        let sat = min_saturated(&u, 3, &cfg()).unwrap().exact().unwrap();
        let ex = max_free(&u, 3, &cfg()).unwrap().exact().unwrap();
        assert!(ssat <= sat && sat <= ex, "{ssat} <= {sat} <= {ex}");
    }

    #[test]
    fn enumerate_includes_known_minimal_witnesses() {
        let abab = pat(&[0, 1, 0, 1]);
        let res = enumerate_minimal(&abab, 3, SearchKind::MinSat, &cfg()).unwrap();
        assert_eq!(res.exact(), Some(5));
        assert!(res.witnesses.iter().any(|w| w == &vec![0, 1, 0, 2, 0]));
        assert_eq!(res.witness_count, res.witnesses.len() as u64);
    }

    #[test]
    fn determinism_across_worker_counts() {
        let u3 = Pattern::alternation(3);
        let one = min_saturated(&u3, 3, &SearchConfig { jobs: 1, ..cfg() }).unwrap();
        let four = min_saturated(&u3, 3, &SearchConfig { jobs: 4, ..cfg() }).unwrap();
        assert_eq!(one.exact(), four.exact());
        assert_eq!(one.witnesses, four.witnesses);
        assert_eq!(one.witness_count, four.witness_count);
    }

    #[test]
    fn budget_exhaustion_reports_interval() {
        let u3 = Pattern::alternation(3);
        let res = min_saturated(&u3, 4, &SearchConfig { max_nodes: 50, ..cfg() }).unwrap();
        match res.value {
            SearchValue::BudgetExceeded { verified_lower, upper } => {
                assert!(verified_lower >= 1);
                assert_eq!(upper, Some(10), "order 3 on 4 letters caps at s(n-1)+1");
            }
            SearchValue::Exact { .. } => panic!("50 nodes cannot exhaust this search"),
        }
    }

    #[test]
    fn conjecture_sat_alt_low_orders() {
        let rep = verify_conjecture_sat_alt(2, 2..=4, &cfg()).unwrap();
        assert!(rep.all_confirmed(), "{:?}", rep.points);
        let rep = verify_conjecture_sat_alt(3, 2..=3, &cfg()).unwrap();
        assert!(rep.all_confirmed(), "{:?}", rep.points);
    }

    // Exhaustive minimums disagree with the conjectured semisaturated
    // lengths at even orders (9 < 12 at order 2 on 6 letters, etc.) and at
    // n=2 for every order (true value s+1); odd orders with n >= 3 agree.
    // An unpruned naive enumeration reproduces the same values, so the
    // refutations are reported honestly rather than silenced.
    #[test]
    fn conjecture_ssat_alt_refutes_even_orders_and_tiny_alphabets() {
        let rep = verify_conjecture_ssat_alt(2, 2..=4, &cfg()).unwrap();
        assert!(rep.refuted());
        for p in &rep.points {
            assert_eq!(p.status, PointStatus::Refuted, "{p:?}");
            assert!(p.counterexample.is_some());
        }

        let rep = verify_conjecture_ssat_alt(3, 2..=4, &cfg()).unwrap();
        let statuses: Vec<_> = rep.points.iter().map(|p| p.status).collect();
        assert_eq!(
            statuses,
            [PointStatus::Refuted, PointStatus::Confirmed, PointStatus::Confirmed],
            "{:?}",
            rep.points
        );
    }

    #[test]
    fn tables_report_confirms_every_row() {
        let rep = verify_tables();
        assert_eq!(rep.points.len(), 32);
        assert!(rep.all_confirmed(), "{:?}", rep.points);
    }

    #[test]
    fn search_result_round_trips_as_json() {
        let res = min_saturated(&pat(&[0, 1, 0, 1]), 2, &cfg()).unwrap();
        let json = serde_json::to_string(&res).unwrap();
        let back: SearchResult = serde_json::from_str(&json).unwrap();
        assert_eq!(back.exact(), res.exact());
        assert_eq!(back.witnesses, res.witnesses);
    }
}
