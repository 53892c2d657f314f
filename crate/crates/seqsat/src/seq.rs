//! Sequences over a bounded alphabet.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

pub type Letter = u32;

/// A finite sequence of letters drawn from the alphabet `0..alphabet_size`.
///
/// The sequence may be empty and need not use every alphabet letter; the
/// alphabet size matters because saturation quantifies over insertions of
/// *every* alphabet letter, used or not.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSequence")]
pub struct Sequence {
    letters: Vec<Letter>,
    alphabet_size: u32,
}

#[derive(Deserialize)]
struct RawSequence {
    letters: Vec<Letter>,
    alphabet_size: u32,
}

impl TryFrom<RawSequence> for Sequence {
    type Error = Error;
    fn try_from(raw: RawSequence) -> Result<Self, Error> {
        Sequence::new(raw.letters, raw.alphabet_size)
    }
}

impl Sequence {
    /// Builds a sequence, validating that every letter is below
    /// `alphabet_size` (which must be at least 1).
    pub fn new(letters: Vec<Letter>, alphabet_size: u32) -> Result<Self, Error> {
        if alphabet_size == 0 {
            return Err(Error::unsupported("alphabet size must be at least 1"));
        }
        if let Some(&bad) = letters.iter().find(|&&a| a >= alphabet_size) {
            return Err(Error::LetterOutOfRange { letter: bad, alphabet_size });
        }
        Ok(Sequence { letters, alphabet_size })
    }

    pub fn empty(alphabet_size: u32) -> Self {
        assert!(alphabet_size >= 1, "alphabet size must be at least 1");
        Sequence { letters: Vec::new(), alphabet_size }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same letters over a different alphabet size.
    pub fn with_alphabet(&self, alphabet_size: u32) -> Result<Self, Error> {
        Sequence::new(self.letters.clone(), alphabet_size)
    }

    /// Number of distinct letters that actually occur.
    pub fn distinct_count(&self) -> u32 {
        let mut seen = vec![false; self.alphabet_size as usize];
        let mut count = 0;
        for &a in &self.letters {
            if !seen[a as usize] {
                seen[a as usize] = true;
                count += 1;
            }
        }
        count
    }

    /// `mask[a]` is true iff letter `a` occurs.
    pub fn used_letters(&self) -> Vec<bool> {
        let mut seen = vec![false; self.alphabet_size as usize];
        for &a in &self.letters {
            seen[a as usize] = true;
        }
        seen
    }

    /// Letters renamed by order of first occurrence (`[5,2,5,9]` becomes
    /// `[0,1,0,2]`). Every predicate in this crate is invariant under
    /// injective renaming, so canonical form identifies isomorphism classes.
    pub fn canonicalize(&self) -> Self {
        Sequence {
            letters: canonical_form(&self.letters),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn is_canonical(&self) -> bool {
        let mut next = 0;
        for &a in &self.letters {
            if a > next {
                return false;
            }
            if a == next {
                next += 1;
            }
        }
        true
    }

    /// True iff equal letters are at least `r` apart; equivalently, any `r`
    /// consecutive letters are pairwise distinct. (The distance form also
    /// constrains sequences shorter than `r`.)
    pub fn is_r_sparse(&self, r: u32) -> bool {
        self.sparsity_violation(r).is_none()
    }

    /// First index whose letter re-occurred within the previous `r-1`
    /// positions, if any.
    pub fn sparsity_violation(&self, r: u32) -> Option<usize> {
        assert!(r >= 1, "sparsity parameter must be at least 1");
        let mut last = vec![usize::MAX; self.alphabet_size as usize];
        for (i, &a) in self.letters.iter().enumerate() {
            let prev = last[a as usize];
            if prev != usize::MAX && i - prev < r as usize {
                return Some(i);
            }
            last[a as usize] = i;
        }
        None
    }

    /// A copy of the sequence with `letter` inserted at `position`
    /// (0 through `len` inclusive).
    pub fn insert(&self, position: usize, letter: Letter) -> Result<Self, Error> {
        if position > self.len() {
            return Err(Error::PositionOutOfRange { position, length: self.len() });
        }
        if letter >= self.alphabet_size {
            return Err(Error::LetterOutOfRange { letter, alphabet_size: self.alphabet_size });
        }
        let mut letters = self.letters.clone();
        letters.insert(position, letter);
        Ok(Sequence { letters, alphabet_size: self.alphabet_size })
    }

    /// A copy with the letter at `position` removed (inverse of `insert`).
    pub fn remove(&self, position: usize) -> Result<Self, Error> {
        if position >= self.len() {
            return Err(Error::PositionOutOfRange { position, length: self.len() });
        }
        let mut letters = self.letters.clone();
        letters.remove(position);
        Ok(Sequence { letters, alphabet_size: self.alphabet_size })
    }

    /// Length of the longest subsequence alternating between `a` and `b`
    /// (starting with either). Streaming rule: restrict to occurrences of
    /// `a`/`b` and count maximal runs — a run contributes one usable letter.
    pub fn longest_alternation(&self, a: Letter, b: Letter) -> usize {
        assert_ne!(a, b, "alternation letters must differ");
        let mut runs = 0;
        let mut last = None;
        for &x in &self.letters {
            if x == a || x == b {
                if last != Some(x) {
                    runs += 1;
                    last = Some(x);
                }
            }
        }
        runs
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence[n={}]({})", self.alphabet_size, crate::text::format_letters(&self.letters))
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_letters(&self.letters))
    }
}

/// First-occurrence renaming of an arbitrary letter slice.
pub fn canonical_form(letters: &[Letter]) -> Vec<Letter> {
    let mut names: HashMap<Letter, Letter> = HashMap::new();
    letters
        .iter()
        .map(|&a| {
            let next = names.len() as Letter;
            *names.entry(a).or_insert(next)
        })
        .collect()
}
