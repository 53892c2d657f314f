#![no_main]

use libfuzzer_sys::fuzz_target;
use seqsat::text::{format_letters, parse_pattern};

// Patterns come in two spellings (compact word, id list); both canonicalize
// by first occurrence, so a successful parse re-enters as the same letters.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(u) = parse_pattern(text) {
        let letters = u.letters();
        assert!(!letters.is_empty());
        assert_eq!(letters[0], 0);
        let mut top = 0;
        for &a in letters {
            assert!(a <= top + 1, "non-canonical letter {a} after top {top}");
            top = top.max(a);
        }
        assert_eq!(u.r() as u64, u64::from(top) + 1);
        let again = parse_pattern(&format_letters(letters)).unwrap();
        assert_eq!(again.letters(), letters);
    }
});
