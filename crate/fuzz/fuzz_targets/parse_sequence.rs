#![no_main]

use libfuzzer_sys::fuzz_target;
use seqsat::text::{format_letters, parse_sequence};

// First byte picks the alphabet size, the rest is the sequence text. A
// successful parse must stay inside the alphabet and survive a format/parse
// round trip; malformed text must error, never panic.
fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let n = u32::from(pick) % 40 + 1;
    if let Ok(s) = parse_sequence(text, n) {
        assert!(s.letters().iter().all(|&a| a < n));
        let again = parse_sequence(&format_letters(s.letters()), n).unwrap();
        assert_eq!(again.letters(), s.letters());
    }
});
