#![no_main]

use libfuzzer_sys::fuzz_target;
use scopegram::types::{parse_type, print_type, PolarityAssignment};

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    let pa = PolarityAssignment::standard();
    if let Ok(t) = parse_type(src, &pa) {
        let printed = print_type(&t);
        assert_eq!(parse_type(&printed, &pa).unwrap(), t, "{printed}");
    }
});
