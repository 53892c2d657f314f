#![no_main]

use libfuzzer_sys::fuzz_target;
use seqsat::cache;

// A cache line that parses must survive semantic verification without
// panicking, and must re-serialize to a line that parses back to the same
// record (the respelled pattern is the fixed point).
fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else { return };
    if let Ok(result) = cache::parse_line(line) {
        let _ = cache::verify_result(&result);
        let again = serde_json::to_string(&result).unwrap();
        let reparsed = cache::parse_line(&again).unwrap();
        assert_eq!(serde_json::to_string(&reparsed).unwrap(), again);
    }
});
