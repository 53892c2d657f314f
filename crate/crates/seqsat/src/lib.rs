//! Saturation and semisaturation of sequences avoiding a forbidden pattern.
//!
//! A sequence over the alphabet `0..n` is *r-sparse* if equal letters are at
//! least `r` positions apart (so any `r` consecutive letters are pairwise
//! distinct). For a pattern `u` with `r` distinct letters, an r-sparse
//! sequence `s` *contains* `u` if some subsequence of `s` is isomorphic to
//! `u` (equal up to an injective renaming of letters); otherwise `s` is
//! *u-free*.
//!
//! `s` is **u-saturated** if it is r-sparse, u-free, and inserting any
//! alphabet letter at any position either breaks r-sparsity or creates a
//! copy of `u`. It is **u-semisaturated** if it is r-sparse and every such
//! insertion breaks r-sparsity or creates a *new* copy of `u` — one through
//! the inserted position; semisaturation does not require u-freeness.
//!
//! The crate provides exact checkers with witnesses ([`predicates`]), the
//! known extremal constructions ([`constructions`]), shape-driven bound
//! reports ([`bounds`]), exhaustive minimum/maximum searches over canonical
//! sequences ([`search`]), the bundled reference tables ([`tables`]), and
//! a CLI front end (`seqsat`).

pub mod bounds;
pub mod cache;
pub mod cli;
pub mod constructions;
pub mod embed;
pub mod pattern;
pub mod predicates;
pub mod search;
pub mod seq;
pub mod tables;
pub mod text;

pub use embed::{contains, contains_naive, contains_through, Embedding};
pub use pattern::Pattern;
pub use seq::{Letter, Sequence};

/// Errors reported by constructors, parsers, and operations with
/// documented failure modes. Precondition violations of the mathematical
/// operations (unsupported pattern shapes, out-of-range parameters) are
/// reported as [`Error::Unsupported`] rather than panics so the CLI can
/// surface them as usage errors.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("letter {letter} out of range for alphabet of size {alphabet_size}")]
    LetterOutOfRange { letter: Letter, alphabet_size: u32 },
    #[error("position {position} out of range for sequence of length {length}")]
    PositionOutOfRange { position: usize, length: usize },
    #[error("pattern must be nonempty")]
    EmptyPattern,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
