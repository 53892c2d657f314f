//! Text formats for sequences and patterns.
//!
//! Sequences are comma- or whitespace-separated decimal letter ids
//! (`"0,1,0,1"`, `"0 1 0 1"`). Patterns additionally accept compact
//! lowercase words (`"abab"`). These parsers accept untrusted input; they
//! must reject malformed text with an error, never panic.

use crate::pattern::Pattern;
use crate::seq::{Letter, Sequence};
use crate::Error;

/// Parses comma/whitespace-separated letter ids. An empty (or all
/// whitespace) input is the empty list; an empty field between commas is an
/// error.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>, Error> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut letters = Vec::new();
    for field in text.split(',') {
        let field = field.trim();
        if field.is_empty() {
            return Err(Error::Parse("empty field between commas".into()));
        }
        for token in field.split_whitespace() {
            let value: Letter = token
                .parse()
                .map_err(|_| Error::Parse(format!("invalid letter id {token:?}")))?;
            letters.push(value);
        }
    }
    Ok(letters)
}

/// Parses a sequence over the alphabet `0..alphabet_size`.
pub fn parse_sequence(text: &str, alphabet_size: u32) -> Result<Sequence, Error> {
    Sequence::new(parse_letters(text)?, alphabet_size)
}

/// Parses a pattern, either as a compact lowercase word (`"abab"`) or as a
/// comma/whitespace-separated id list (`"0,1,0,1"`; ids are canonicalized).
pub fn parse_pattern(text: &str) -> Result<Pattern, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty pattern".into()));
    }
    if trimmed.chars().all(|c| c.is_ascii_lowercase()) {
        let letters: Vec<Letter> = trimmed.chars().map(|c| c as Letter - 'a' as Letter).collect();
        return Pattern::new(&letters);
    }
    let letters = parse_letters(text)?;
    Pattern::new(&letters)
}

/// Comma-separated rendering, the inverse of `parse_letters`.
pub fn format_letters(letters: &[Letter]) -> String {
    letters.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sequences() {
        assert_eq!(parse_letters("0,1,0,1").unwrap(), vec![0, 1, 0, 1]);
        assert_eq!(parse_letters("0 1  2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_letters(" 3,4 5 ,6 ").unwrap(), vec![3, 4, 5, 6]);
        assert_eq!(parse_letters("").unwrap(), Vec::<Letter>::new());
        assert_eq!(parse_letters("  ").unwrap(), Vec::<Letter>::new());
        assert!(parse_letters("a,,b").is_err());
        assert!(parse_letters("0,").is_err());
        assert!(parse_letters("x").is_err());
        assert!(parse_letters("-1").is_err());
        assert!(parse_letters("99999999999999999999").is_err());
    }

    #[test]
    fn parses_patterns() {
        assert_eq!(parse_pattern("abab").unwrap().letters(), &[0, 1, 0, 1]);
        assert_eq!(parse_pattern("0,1,0,1").unwrap().letters(), &[0, 1, 0, 1]);
        // Word letters are canonicalized by first occurrence, as are ids.
        assert_eq!(parse_pattern("ba").unwrap().letters(), &[0, 1]);
        assert_eq!(parse_pattern("0,2,0,9").unwrap().letters(), &[0, 1, 0, 2]);
        assert!(parse_pattern("").is_err());
        assert!(parse_pattern("   ").is_err());
        assert!(parse_pattern("aBa").is_err());
        assert!(parse_pattern("a,,b").is_err());
    }

    #[test]
    fn format_round_trips() {
        for letters in [vec![], vec![0], vec![0, 1, 0, 2]] {
            assert_eq!(parse_letters(&format_letters(&letters)).unwrap(), letters);
        }
    }
}
