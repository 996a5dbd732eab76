#![no_main]

use libfuzzer_sys::fuzz_target;
use scopegram::focused::parse_brackets;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(b) = parse_brackets(src) {
        let n = b.positions().len();
        if b.validate(n).is_ok() {
            assert_eq!(parse_brackets(&b.to_string()).unwrap(), b);
        }
    }
});
