//! Bundled reference witnesses: program-generated sequences conjectured to
//! be shortest saturated / semisaturated hosts for two-letter alternations,
//! together with the conjectured length formulas and per-row verification.

use serde::{Deserialize, Serialize};

use crate::pattern::Pattern;
use crate::predicates::{check_saturated, check_semisaturated, check_semisaturated_anchored, VerdictStatus};
use crate::seq::{Letter, Sequence};

#[derive(Clone, Copy, Debug)]
pub struct ReferenceRow {
    /// Alternation order s; the avoided pattern is the alternation of
    /// length s+2.
    pub order: u32,
    pub alphabet_size: u32,
    pub letters: &'static [Letter],
}

impl ReferenceRow {
    pub fn sequence(&self) -> Sequence {
        Sequence::new(self.letters.to_vec(), self.alphabet_size)
            .expect("reference rows are valid sequences")
    }
}

/// Conjectured minimum length of a saturated host for the order-s
/// alternation on n letters: s(n-1)+1.
pub fn conjectured_saturated_length(order: u32, n: u32) -> usize {
    (order as usize) * (n as usize - 1) + 1
}

/// Conjectured minimum length of a semisaturated host for the order-s
/// alternation on n letters: n(s+2)/2 for even s, n(s+1)/2 + 1 for odd s.
pub fn conjectured_semisaturated_length(order: u32, n: u32) -> usize {
    let n = n as usize;
    let s = order as usize;
    if s % 2 == 0 {
        n * (s + 2) / 2
    } else {
        n * (s + 1) / 2 + 1
    }
}

pub const SATURATED_ROWS: &[ReferenceRow] = &[
    ReferenceRow { order: 2, alphabet_size: 7, letters: &[0, 1, 2, 1, 3, 1, 4, 5, 4, 1, 6, 1, 0] },
    ReferenceRow { order: 2, alphabet_size: 7, letters: &[0, 1, 0, 2, 0, 3, 4, 5, 4, 6, 4, 3, 0] },
    ReferenceRow { order: 2, alphabet_size: 7, letters: &[0, 1, 2, 1, 3, 1, 4, 1, 0, 5, 6, 5, 0] },
    ReferenceRow {
        order: 3,
        alphabet_size: 7,
        letters: &[0, 1, 2, 1, 0, 1, 2, 3, 4, 3, 2, 3, 4, 5, 6, 5, 4, 5, 6],
    },
    ReferenceRow {
        order: 3,
        alphabet_size: 7,
        letters: &[0, 1, 2, 1, 0, 1, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 6, 5, 6],
    },
    ReferenceRow {
        order: 3,
        alphabet_size: 7,
        letters: &[0, 1, 0, 1, 2, 1, 2, 3, 4, 5, 4, 3, 2, 3, 4, 5, 6, 5, 6],
    },
    ReferenceRow {
        order: 3,
        alphabet_size: 7,
        letters: &[0, 1, 0, 1, 2, 1, 2, 3, 2, 3, 4, 3, 4, 5, 6, 5, 4, 5, 6],
    },
    ReferenceRow {
        order: 4,
        alphabet_size: 7,
        letters: &[0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 4, 3, 0, 3, 4, 3, 5, 3, 6, 3, 5, 3, 6, 3, 0],
    },
    ReferenceRow {
        order: 4,
        alphabet_size: 7,
        letters: &[0, 1, 0, 1, 2, 1, 2, 1, 3, 1, 3, 1, 4, 1, 4, 1, 5, 1, 6, 1, 5, 1, 6, 1, 0],
    },
    ReferenceRow {
        order: 4,
        alphabet_size: 7,
        letters: &[0, 1, 0, 1, 0, 2, 0, 2, 3, 2, 3, 2, 0, 4, 0, 4, 0, 5, 0, 5, 0, 6, 0, 6, 0],
    },
    ReferenceRow {
        order: 4,
        alphabet_size: 7,
        letters: &[0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 4, 0, 5, 0, 6, 0, 3, 0, 4, 0, 5, 0, 6, 0],
    },
    ReferenceRow {
        order: 4,
        alphabet_size: 7,
        letters: &[0, 1, 0, 2, 0, 2, 0, 1, 0, 3, 0, 4, 0, 3, 5, 3, 5, 3, 6, 3, 6, 3, 0, 4, 0],
    },
    ReferenceRow {
        order: 5,
        alphabet_size: 6,
        letters: &[0, 1, 2, 1, 0, 1, 0, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 4, 3, 4, 5],
    },
    ReferenceRow {
        order: 5,
        alphabet_size: 6,
        letters: &[0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 3, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 4, 3, 4, 5],
    },
    ReferenceRow {
        order: 5,
        alphabet_size: 6,
        letters: &[0, 1, 0, 1, 0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 4, 3, 4, 5, 4, 5, 4, 5],
    },
    ReferenceRow {
        order: 5,
        alphabet_size: 6,
        letters: &[0, 1, 0, 1, 0, 1, 2, 1, 2, 1, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 4, 5, 4, 5, 4, 5],
    },
];

pub const SEMISATURATED_ROWS: &[ReferenceRow] = &[
    ReferenceRow { order: 2, alphabet_size: 6, letters: &[0, 1, 0, 1, 2, 3, 2, 3, 4, 5, 4, 5] },
    ReferenceRow { order: 2, alphabet_size: 6, letters: &[0, 1, 2, 3, 0, 3, 2, 4, 5, 1, 4, 5] },
    ReferenceRow { order: 2, alphabet_size: 6, letters: &[0, 1, 2, 3, 4, 1, 4, 0, 3, 5, 2, 5] },
    ReferenceRow { order: 2, alphabet_size: 6, letters: &[0, 1, 2, 3, 4, 5, 2, 1, 5, 3, 0, 4] },
    ReferenceRow { order: 4, alphabet_size: 4, letters: &[0, 1, 0, 1, 0, 1, 2, 3, 2, 3, 2, 3] },
    ReferenceRow { order: 4, alphabet_size: 4, letters: &[0, 1, 2, 3, 1, 0, 2, 3, 1, 3, 0, 2] },
    ReferenceRow { order: 4, alphabet_size: 4, letters: &[0, 1, 2, 3, 1, 0, 3, 2, 1, 3, 0, 2] },
    ReferenceRow { order: 4, alphabet_size: 4, letters: &[0, 1, 2, 3, 2, 3, 2, 3, 0, 1, 0, 1] },
    ReferenceRow { order: 3, alphabet_size: 5, letters: &[0, 1, 2, 0, 1, 2, 0, 3, 4, 3, 4] },
    ReferenceRow { order: 3, alphabet_size: 5, letters: &[0, 1, 2, 3, 4, 2, 0, 1, 3, 2, 4] },
    ReferenceRow { order: 3, alphabet_size: 5, letters: &[0, 1, 2, 3, 4, 3, 1, 2, 4, 3, 0] },
    ReferenceRow { order: 3, alphabet_size: 6, letters: &[0, 1, 2, 3, 4, 5, 4, 0, 1, 2, 5, 4, 3] },
    ReferenceRow { order: 5, alphabet_size: 4, letters: &[0, 1, 0, 1, 0, 1, 0, 2, 3, 2, 3, 2, 3] },
    ReferenceRow { order: 5, alphabet_size: 4, letters: &[0, 1, 2, 3, 1, 0, 2, 3, 1, 0, 2, 3, 1] },
    ReferenceRow { order: 5, alphabet_size: 4, letters: &[0, 1, 2, 3, 1, 0, 2, 3, 1, 2, 3, 1, 0] },
    ReferenceRow { order: 5, alphabet_size: 4, letters: &[0, 1, 2, 3, 2, 0, 1, 3, 2, 0, 1, 3, 2] },
];

/// Indices into [`SEMISATURATED_ROWS`] that verify only under anchored
/// blocking (see `check_semisaturated_anchored`): their generating program
/// evidently allowed distinct separator letters inside a blocking
/// alternation. All other rows, and every saturated row, verify strictly.
pub const ANCHORED_ONLY_SEMISATURATED: &[usize] = &[8, 9, 10, 11, 12, 13, 15];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowVerification {
    /// Passes the injective-copy checker.
    Strict,
    /// Passes only with anchored-alternation blocking.
    Anchored,
    Failed,
}

pub fn verify_saturated_row(row: &ReferenceRow) -> RowVerification {
    let u = Pattern::alternation(row.order);
    match check_saturated(&row.sequence(), &u).status {
        VerdictStatus::Saturated => RowVerification::Strict,
        _ => RowVerification::Failed,
    }
}

pub fn verify_semisaturated_row(row: &ReferenceRow) -> RowVerification {
    let s = row.sequence();
    let u = Pattern::alternation(row.order);
    if check_semisaturated(&s, &u).status == VerdictStatus::Semisaturated {
        return RowVerification::Strict;
    }
    if check_semisaturated_anchored(&s, row.order).status == VerdictStatus::Semisaturated {
        return RowVerification::Anchored;
    }
    RowVerification::Failed
}
