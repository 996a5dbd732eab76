#![no_main]

use libfuzzer_sys::fuzz_target;
use scopegram::types::Lexicon;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(lex) = Lexicon::parse(src) {
        for e in lex.entries() {
            assert!(!lex.lookup(&e.word).is_empty());
        }
    }
});
