//! Forbidden patterns in canonical form, plus the shape tests that drive
//! the bound clauses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::seq::{canonical_form, Letter};
use crate::Error;

/// A nonempty pattern word, stored canonically (letters numbered by first
/// occurrence) together with its occurrence statistics.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct Pattern {
    letters: Vec<Letter>,
    freq: Vec<u32>,
}

impl TryFrom<Vec<Letter>> for Pattern {
    type Error = Error;
    fn try_from(letters: Vec<Letter>) -> Result<Self, Error> {
        Pattern::new(&letters)
    }
}

impl From<Pattern> for Vec<Letter> {
    fn from(p: Pattern) -> Vec<Letter> {
        p.letters
    }
}

impl Pattern {
    /// Canonicalizes `letters` (arbitrary ids allowed) into a pattern.
    pub fn new(letters: &[Letter]) -> Result<Self, Error> {
        if letters.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let letters = canonical_form(letters);
        let r = letters.iter().map(|&a| a + 1).max().unwrap() as usize;
        let mut freq = vec![0u32; r];
        for &a in &letters {
            freq[a as usize] += 1;
        }
        Ok(Pattern { letters, freq })
    }

    /// The alternation `0,1,0,1,...` of length `order + 2` (order 1 is
    /// `aba`, order 2 is `abab`, ...).
    pub fn alternation(order: u32) -> Self {
        let letters: Vec<Letter> = (0..order as usize + 2).map(|i| (i % 2) as Letter).collect();
        Pattern::new(&letters).unwrap()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Pattern length, usually written l.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of distinct letters; this is also the sparsity parameter r
    /// that saturation uses for this pattern.
    pub fn r(&self) -> u32 {
        self.freq.len() as u32
    }

    /// Occurrence count of each pattern letter.
    pub fn freq(&self) -> &[u32] {
        &self.freq
    }

    /// Minimum occurrence count over the pattern's letters.
    pub fn min_multiplicity(&self) -> u32 {
        *self.freq.iter().min().unwrap()
    }

    /// Occurrence count of the first letter.
    pub fn first_multiplicity(&self) -> u32 {
        self.freq[self.letters[0] as usize]
    }

    /// Occurrence count of the last letter.
    pub fn last_multiplicity(&self) -> u32 {
        self.freq[*self.letters.last().unwrap() as usize]
    }

    /// Number of distinct letters that occur exactly once.
    pub fn singleton_count(&self) -> u32 {
        self.freq.iter().filter(|&&f| f == 1).count() as u32
    }

    /// All letters distinct (`abc...`).
    pub fn is_all_distinct(&self) -> bool {
        self.len() == self.r() as usize
    }

    /// `Some(order)` iff the pattern is a two-letter alternation
    /// `0,1,0,1,...` of length at least 3; `order = len - 2`.
    pub fn alternation_order(&self) -> Option<u32> {
        if self.len() < 3 {
            return None;
        }
        for (i, &a) in self.letters.iter().enumerate() {
            if a != (i % 2) as Letter {
                return None;
            }
        }
        Some(self.len() as u32 - 2)
    }

    /// Distinct letters followed by a repeat of the first: `a_1...a_k a_1`.
    pub fn is_initial_repeat(&self) -> bool {
        let r = self.r() as usize;
        self.len() == r + 1
            && self.letters[r] == 0
            && self.letters[..r].iter().enumerate().all(|(i, &a)| a == i as Letter)
    }

    /// `Some((k, reps))` iff the pattern is a block of k distinct letters
    /// repeated `reps >= 2` times: `(a_1...a_k)^reps`.
    pub fn power_block(&self) -> Option<(u32, u32)> {
        let k = self.r() as usize;
        if self.len() % k != 0 {
            return None;
        }
        let reps = self.len() / k;
        if reps < 2 {
            return None;
        }
        for (i, &a) in self.letters.iter().enumerate() {
            if a != (i % k) as Letter {
                return None;
            }
        }
        Some((k as u32, reps as u32))
    }

    /// Nested shape `a_1...a_{k-1} a_k a_{k-1}...a_1`.
    pub fn is_nested(&self) -> bool {
        let r = self.r() as usize;
        if self.len() != 2 * r - 1 {
            return false;
        }
        self.letters.iter().enumerate().all(|(i, &a)| {
            let expect = if i < r { i } else { 2 * r - 2 - i };
            a == expect as Letter
        })
    }

    /// The pattern with one more copy of its last letter appended.
    pub fn with_last_doubled(&self) -> Pattern {
        let mut letters = self.letters.clone();
        letters.push(*self.letters.last().unwrap());
        Pattern::new(&letters).unwrap()
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r() <= 26 {
            for &a in &self.letters {
                write!(f, "{}", (b'a' + a as u8) as char)?;
            }
            Ok(())
        } else {
            f.write_str(&crate::text::format_letters(&self.letters))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_and_counts() {
        let u = Pattern::new(&[7, 3, 7, 9]).unwrap();
        assert_eq!(u.letters(), &[0, 1, 0, 2]);
        assert_eq!(u.r(), 3);
        assert_eq!(u.len(), 4);
        assert_eq!(u.freq(), &[2, 1, 1]);
        assert_eq!(u.min_multiplicity(), 1);
        assert_eq!(u.first_multiplicity(), 2);
        assert_eq!(u.last_multiplicity(), 1);
        assert!(Pattern::new(&[]).is_err());
    }

    #[test]
    fn alternation_shapes() {
        assert_eq!(Pattern::alternation(2).letters(), &[0, 1, 0, 1]);
        assert_eq!(Pattern::alternation(2).alternation_order(), Some(2));
        assert_eq!(Pattern::alternation(3).to_string(), "ababa");
        assert_eq!(Pattern::new(&[0, 1]).unwrap().alternation_order(), None);
        assert_eq!(Pattern::new(&[0, 1, 0, 2]).unwrap().alternation_order(), None);
    }

    #[test]
    fn shape_detectors() {
        assert!(Pattern::new(&[0, 1, 2]).unwrap().is_all_distinct());
        assert!(!Pattern::new(&[0, 1, 0]).unwrap().is_all_distinct());
        assert!(Pattern::new(&[0, 1, 2, 0]).unwrap().is_initial_repeat());
        assert!(!Pattern::new(&[0, 1, 2, 1]).unwrap().is_initial_repeat());
        assert_eq!(Pattern::new(&[0, 1, 2, 0, 1, 2]).unwrap().power_block(), Some((3, 2)));
        assert_eq!(Pattern::new(&[0, 1, 0, 1, 0, 1]).unwrap().power_block(), Some((2, 3)));
        assert_eq!(Pattern::new(&[0, 1, 2]).unwrap().power_block(), None);
        assert!(Pattern::new(&[0, 1, 2, 1, 0]).unwrap().is_nested());
        assert!(Pattern::new(&[0, 1, 0]).unwrap().is_nested());
        assert!(!Pattern::new(&[0, 1, 2, 0]).unwrap().is_nested());
        assert_eq!(
            Pattern::new(&[0, 1, 0, 1]).unwrap().with_last_doubled().letters(),
            &[0, 1, 0, 1, 1]
        );
    }

    #[test]
    fn singleton_counts() {
        assert_eq!(Pattern::new(&[0, 1, 2]).unwrap().singleton_count(), 3);
        assert_eq!(Pattern::new(&[0, 1, 0, 1]).unwrap().singleton_count(), 0);
        assert_eq!(Pattern::new(&[0, 1, 1, 2]).unwrap().singleton_count(), 2);
    }
}
