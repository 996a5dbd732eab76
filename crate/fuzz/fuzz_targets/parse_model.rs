#![no_main]

use libfuzzer_sys::fuzz_target;
use scopegram::oracle::Model;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(m) = Model::parse(src) {
        // Display output must parse back to the same model.
        let text = m.to_string();
        assert_eq!(Model::parse(&text).unwrap(), m, "{text}");
    }
});
