#![no_main]

use libfuzzer_sys::fuzz_target;
use theaetetus::ProofTrace;

fuzz_target!(|data: &[u8]| {
    if let Ok(trace) = serde_json::from_slice::<ProofTrace>(data) {
        // Replay must never panic, whatever the file claimed; and a trace
        // that replays must survive a serialization roundtrip.
        if trace.replay().is_ok() {
            let json = serde_json::to_vec(&trace).expect("trace serializes");
            let back: ProofTrace = serde_json::from_slice(&json).expect("roundtrip parses");
            assert_eq!(back, trace);
        }
    }
});
