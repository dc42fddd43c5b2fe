#![no_main]

use euclid_arith::Natural;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(n) = s.parse::<Natural>() {
        // Display/parse must roundtrip to an equal value.
        let back: Natural = n.to_string().parse().expect("display form reparses");
        assert_eq!(back, n);
    }
});
