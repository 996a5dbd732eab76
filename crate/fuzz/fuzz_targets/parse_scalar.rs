#![no_main]

use libfuzzer_sys::fuzz_target;
use scopegram::scalar::Scalar;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(x) = src.parse::<Scalar>() {
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }
});
